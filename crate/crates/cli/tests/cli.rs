use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semiring-ideals"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = run(&full);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn gallery_json_round_trips_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["B", "L3", "BxB", "N2"] {
        let o = run(&["gallery", name]);
        assert!(o.status.success());
        let file = write(dir.path(), &format!("{name}.json"), &stdout(&o));
        let v = run(&["validate", &file]);
        assert_eq!(v.status.code(), Some(0), "{name}");
        let from_file = json(&["ideals", &file]);
        let from_gallery = json(&["ideals", &format!("gallery:{name}")]);
        assert_eq!(from_file["ideals"], from_gallery["ideals"]);
    }
}

#[test]
fn ragged_table_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "ragged.json",
        r#"{"size": 2, "add": [[0,1,1],[1,1]], "mul": [[0,0],[0,1]], "zero": 0, "one": 1}"#,
    );
    let o = run(&["validate", &file]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("add row 0"));
}

#[test]
fn non_associative_table_exits_one_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "bad.json",
        r#"{"size": 3, "add": [[0,1,2],[1,2,1],[2,1,1]], "mul": [[0,0,0],[0,1,2],[0,2,2]], "zero": 0, "one": 1}"#,
    );
    assert_eq!(run(&["validate", &file]).status.code(), Some(1));
    let o = run(&["--json", "validate", &file]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["valid"], false);
    let assoc = v["violations"]
        .as_array()
        .unwrap()
        .iter()
        .find(|x| x["law"] == "additive associativity")
        .expect("associativity reported");
    let w: Vec<usize> = serde_json::from_value(assoc["witness"].clone()).unwrap();
    let add = [[0, 1, 2], [1, 2, 1], [2, 1, 1]];
    assert_ne!(add[add[w[0]][w[1]]][w[2]], add[w[0]][add[w[1]][w[2]]]);
}

#[test]
fn size_cap_exits_two() {
    assert_eq!(run(&["--size-cap", "8", "ideals", "gallery:L3xL3"]).status.code(), Some(2));
    assert_eq!(run(&["ideals", "gallery:nope"]).status.code(), Some(2));
}

#[test]
fn spectrum_of_l3() {
    let o = run(&["spec", "gallery:L3"]);
    assert_eq!(stdout(&o).lines().collect::<Vec<_>>(), ["{0}", "{0, s}"]);
    let o = run(&["max", "gallery:L3"]);
    assert_eq!(stdout(&o).trim(), "{0, s}");
}

#[test]
fn decomposing_zero_in_bxb() {
    let v = json(&["decompose", "gallery:BxB", "--ideal", "(0,0)"]);
    let expected = serde_json::json!([["(0,0)", "(0,1)"], ["(0,0)", "(1,0)"]]);
    assert_eq!(v["components"], expected);
    assert_eq!(v["minimal_primes"], expected);
    let v = json(&["decompose", "gallery:BxB", "--ideal", "(0,0)", "--kind", "irreducible"]);
    assert_eq!(v["components"], expected);
}

#[test]
fn homomorphism_checks() {
    let ok = run(&["hom-check", "gallery:L3", "gallery:B", "--map", "0:0,s:1,1:1"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("injective false"));
    let bad = run(&["hom-check", "gallery:L3", "gallery:B", "--map", "0:1,s:1,1:0"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("preserves zero"));
}

#[test]
fn localizing_l3() {
    let v = json(&["localize", "gallery:L3", "--mcset", "s,1"]);
    assert_eq!(v["semiring"]["size"], 2);
    let fractions = v["classes"].as_array().unwrap();
    assert_eq!(fractions.len(), 6);
    let classes: std::collections::BTreeSet<String> =
        fractions.iter().map(|f| f["class"].to_string()).collect();
    assert_eq!(classes.len(), 2);
}

#[test]
fn module_file_relative_to_its_ring() {
    let dir = tempfile::tempdir().unwrap();
    let ring = run(&["gallery", "L3"]);
    write(dir.path(), "l3.json", &stdout(&ring));
    let file = write(
        dir.path(),
        "m.json",
        r#"{"ring": "l3.json", "size": 3, "add": [[0,1,2],[1,1,1],[2,1,2]], "zero": 0, "action": [[0,0,0],[0,1,2],[0,2,2]]}"#,
    );
    let o = run(&["module-check", &file]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("M = 0: false, all M_p = 0: false, all M_m = 0: false"));
}

#[test]
fn check_selection() {
    let v = json(&["check", "gallery:B", "--only", "semiring-axioms,krull-radical"]);
    let props = v["propositions"].as_array().unwrap();
    assert_eq!(props.len(), 2);
    assert!(props.iter().all(|p| p["failures"].as_array().unwrap().is_empty()));
    assert_eq!(run(&["check", "gallery:B", "--only", "bogus"]).status.code(), Some(2));
}
