//! JSON files and `gallery:<name>` references.

use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gallery;
use crate::semimodules::{validate_semimodule, FiniteSemimodule, RawSemimodule};
use crate::semiring::{validate_semiring, FiniteSemiring, RawSemiring};

pub const GALLERY_PREFIX: &str = "gallery:";

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
}

fn check_cap(size: usize, cap: usize) -> Result<()> {
    if size > cap {
        return Err(Error::SizeCapExceeded { size, cap });
    }
    Ok(())
}

/// Shape problems in a file are reported as parse errors naming the field.
fn as_parse_error(e: Error) -> Error {
    match e {
        Error::MalformedTable(msg) => Error::Parse(msg),
        other => other,
    }
}

pub fn parse_semiring_str(text: &str, cap: usize) -> Result<FiniteSemiring> {
    let raw: RawSemiring = serde_json::from_str(text).map_err(parse_error)?;
    from_raw(raw, cap)
}

fn from_raw(raw: RawSemiring, cap: usize) -> Result<FiniteSemiring> {
    check_cap(raw.size, cap)?;
    validate_semiring(&raw).map_err(as_parse_error)
}

/// Files without a `name` field are named after their stem.
pub fn parse_semiring_file(path: impl AsRef<Path>, cap: usize) -> Result<FiniteSemiring> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    let mut raw: RawSemiring = serde_json::from_str(&text).map_err(parse_error)?;
    if raw.name.is_none() {
        raw.name = path.file_stem().and_then(|x| x.to_str()).map(String::from);
    }
    from_raw(raw, cap)
}

/// Resolve a semiring reference: `gallery:<name>`, `gallery:all` or a
/// file path.
pub fn load_semirings(reference: &str, cap: usize) -> Result<Vec<FiniteSemiring>> {
    match reference.strip_prefix(GALLERY_PREFIX) {
        Some("all") => {
            let all = gallery::gallery();
            for s in &all {
                check_cap(s.size(), cap)?;
            }
            Ok(all)
        }
        Some(name) => {
            let s = gallery::by_name(name)?;
            check_cap(s.size(), cap)?;
            Ok(vec![s])
        }
        None => Ok(vec![parse_semiring_file(reference, cap)?]),
    }
}

/// Like [`load_semirings`] but insists on exactly one semiring.
pub fn load_semiring(reference: &str, cap: usize) -> Result<FiniteSemiring> {
    let mut all = load_semirings(reference, cap)?;
    if all.len() != 1 {
        return Err(Error::Parse(format!(
            "{reference} names {} semirings, expected one",
            all.len()
        )));
    }
    Ok(all.remove(0))
}

/// Parse a semimodule description. A relative ring path is resolved
/// against `base_dir`.
pub fn parse_semimodule_str(
    text: &str,
    base_dir: &Path,
    cap: usize,
) -> Result<FiniteSemimodule> {
    let raw: RawSemimodule = serde_json::from_str(text).map_err(parse_error)?;
    let ring_ref = if raw.ring.starts_with(GALLERY_PREFIX) || Path::new(&raw.ring).is_absolute() {
        raw.ring.clone()
    } else {
        base_dir.join(&raw.ring).to_string_lossy().into_owned()
    };
    let ring = Arc::new(load_semiring(&ring_ref, cap)?);
    if raw.add.len() != raw.size {
        return Err(Error::Parse(format!(
            "add has {} rows, size is {}",
            raw.add.len(),
            raw.size
        )));
    }
    validate_semimodule(&ring, raw.elements, raw.add, raw.zero, raw.action).map_err(as_parse_error)
}

pub fn parse_semimodule_file(path: impl AsRef<Path>, cap: usize) -> Result<FiniteSemimodule> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    parse_semimodule_str(&text, dir, cap)
}

pub fn semiring_to_json(s: &FiniteSemiring) -> String {
    serde_json::to_string_pretty(&s.to_raw()).expect("tables serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::DEFAULT_SIZE_CAP;

    const BOOLEAN: &str = r#"{"name": "B", "size": 2, "add": [[0,1],[1,1]], "mul": [[0,0],[0,1]], "zero": 0, "one": 1}"#;

    #[test]
    fn boolean_parses() {
        let s = parse_semiring_str(BOOLEAN, DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(s, gallery::boolean());
    }

    #[test]
    fn ragged_table_is_a_parse_error() {
        let text = r#"{"size": 2, "add": [[0,1,1],[1,1,1]], "mul": [[0,0],[0,1]], "zero": 0, "one": 1}"#;
        assert!(matches!(parse_semiring_str(text, 8), Err(Error::Parse(_))));
        assert!(matches!(parse_semiring_str("{\"size\": ", 8), Err(Error::Parse(_))));
    }

    #[test]
    fn non_associative_addition_is_an_axiom_violation() {
        // x+y = 1 unless both are 0, except 1+1 = 2: not associative
        let text = r#"{"size": 3, "add": [[0,1,2],[1,2,1],[2,1,1]], "mul": [[0,0,0],[0,1,2],[0,2,2]], "zero": 0, "one": 1}"#;
        match parse_semiring_str(text, 8) {
            Err(Error::AxiomViolation { violations }) => {
                assert!(violations.iter().any(|v| v.witness.len() == 3));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            load_semirings("gallery:L3xL3", 8),
            Err(Error::SizeCapExceeded { size: 9, cap: 8 })
        ));
        assert_eq!(load_semirings("gallery:all", 9).unwrap().len(), gallery::names().len());
    }

    #[test]
    fn json_round_trip() {
        for s in gallery::gallery() {
            let back = parse_semiring_str(&semiring_to_json(&s), 64).unwrap();
            assert_eq!(back, s);
            assert_eq!(back.element_names(), s.element_names());
        }
    }

    #[test]
    fn module_file_resolves_gallery_ring() {
        let text = r#"{"ring": "gallery:B", "size": 2, "add": [[0,1],[1,1]], "zero": 0, "action": [[0,0],[0,1]]}"#;
        let m = parse_semimodule_str(text, Path::new("."), 8).unwrap();
        assert_eq!(m.size(), 2);
    }
}
