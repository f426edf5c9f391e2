//! Semiring homomorphisms, kernels, contraction and extension of ideals.

use std::sync::Arc;

use crate::error::{Error, Result, Violation};
use crate::ideals::Ideal;
use crate::semiring::{Element, FiniteSemiring, ONE, ZERO};
use crate::set::ElementSet;

pub mod law {
    pub const ADDITIVE: &str = "preserves addition";
    pub const MULTIPLICATIVE: &str = "preserves multiplication";
    pub const ZERO: &str = "preserves zero";
    pub const ONE: &str = "preserves one";
}

/// A validated map between two finite semirings preserving `+`, `·`,
/// `0` and `1`.
#[derive(Debug, Clone)]
pub struct SemiringHom {
    source: Arc<FiniteSemiring>,
    target: Arc<FiniteSemiring>,
    map: Vec<Element>,
}

fn hom_violations(
    source: &FiniteSemiring,
    target: &FiniteSemiring,
    map: &[Element],
) -> Vec<Violation> {
    let mut out = Vec::new();
    if map[ZERO] != ZERO {
        out.push(Violation {
            law: law::ZERO,
            witness: vec![ZERO],
        });
    }
    if map[ONE] != ONE {
        out.push(Violation {
            law: law::ONE,
            witness: vec![ONE],
        });
    }
    let mut additive = None;
    let mut multiplicative = None;
    for r in source.elements() {
        for s in source.elements() {
            if additive.is_none() && map[source.add(r, s)] != target.add(map[r], map[s]) {
                additive = Some(vec![r, s]);
            }
            if multiplicative.is_none() && map[source.mul(r, s)] != target.mul(map[r], map[s]) {
                multiplicative = Some(vec![r, s]);
            }
        }
    }
    if let Some(witness) = additive {
        out.push(Violation {
            law: law::ADDITIVE,
            witness,
        });
    }
    if let Some(witness) = multiplicative {
        out.push(Violation {
            law: law::MULTIPLICATIVE,
            witness,
        });
    }
    out
}

/// Check that `map` is a semiring homomorphism `source → target`.
///
/// Violations carry the least witness for each failed law: `[0]` or `[1]`
/// for the constants, a pair `[r, s]` for the operations.
pub fn validate_hom(
    source: &Arc<FiniteSemiring>,
    target: &Arc<FiniteSemiring>,
    map: Vec<Element>,
) -> Result<SemiringHom> {
    if map.len() != source.size() {
        return Err(Error::MalformedTable(format!(
            "map has {} entries for a source of size {}",
            map.len(),
            source.size()
        )));
    }
    if let Some(&bad) = map.iter().find(|&&x| x >= target.size()) {
        return Err(Error::MalformedTable(format!(
            "map value {bad} is outside the target"
        )));
    }
    let violations = hom_violations(source, target, &map);
    if !violations.is_empty() {
        return Err(Error::HomViolation { violations });
    }
    Ok(SemiringHom {
        source: Arc::clone(source),
        target: Arc::clone(target),
        map,
    })
}

/// Every homomorphism `source → target`, found by backtracking over maps
/// with `0 ↦ 0` and `1 ↦ 1`, in lexicographic order of the map.
pub fn enumerate_homs(
    source: &Arc<FiniteSemiring>,
    target: &Arc<FiniteSemiring>,
) -> Vec<SemiringHom> {
    let n = source.size();
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; n];
    map[ZERO] = ZERO;
    map[ONE] = ONE;

    // Consistency of every law whose operands and result are all assigned.
    fn consistent(s: &FiniteSemiring, t: &FiniteSemiring, map: &[usize], upto: usize) -> bool {
        let assigned = |e: usize| e <= upto;
        for r in 0..=upto {
            for q in 0..=upto {
                let sum = s.add(r, q);
                if assigned(sum) && map[sum] != t.add(map[r], map[q]) {
                    return false;
                }
                let prod = s.mul(r, q);
                if assigned(prod) && map[prod] != t.mul(map[r], map[q]) {
                    return false;
                }
            }
        }
        true
    }

    fn go(
        s: &FiniteSemiring,
        t: &FiniteSemiring,
        map: &mut Vec<usize>,
        next: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if next == s.size() {
            out.push(map.clone());
            return;
        }
        for v in 0..t.size() {
            map[next] = v;
            if consistent(s, t, map, next) {
                go(s, t, map, next + 1, out);
            }
        }
        map[next] = usize::MAX;
    }

    let mut maps = Vec::new();
    if consistent(source, target, &map, ONE) {
        go(source, target, &mut map, 2, &mut maps);
    }
    for m in maps {
        out.push(SemiringHom {
            source: Arc::clone(source),
            target: Arc::clone(target),
            map: m,
        });
    }
    out
}

impl SemiringHom {
    pub fn identity(s: &Arc<FiniteSemiring>) -> Self {
        SemiringHom {
            source: Arc::clone(s),
            target: Arc::clone(s),
            map: s.elements().collect(),
        }
    }

    pub fn source(&self) -> &Arc<FiniteSemiring> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteSemiring> {
        &self.target
    }

    pub fn map(&self) -> &[Element] {
        &self.map
    }

    pub fn apply(&self, e: Element) -> Element {
        self.map[e]
    }

    pub fn image_of(&self, set: ElementSet) -> ElementSet {
        set.iter().map(|e| self.map[e]).collect()
    }

    pub fn is_injective(&self) -> bool {
        self.image_of(self.source.all()).len() == self.source.size()
    }

    /// `ker(f) = f⁻¹(0)`.
    pub fn kernel(&self) -> Ideal {
        self.source.wrap(self.preimage(ElementSet::singleton(ZERO)))
    }

    fn preimage(&self, set: ElementSet) -> ElementSet {
        self.source
            .elements()
            .filter(|&e| set.contains(self.map[e]))
            .collect()
    }

    /// `Jᶜ = f⁻¹(J)` for an ideal `J` of the target.
    pub fn contract(&self, j: &Ideal) -> Result<Ideal> {
        self.target.own(j)?;
        Ok(self.source.wrap(self.preimage(j.members())))
    }

    /// `Iᵉ`: the ideal of the target generated by `f(I)`.
    pub fn extend(&self, i: &Ideal) -> Result<Ideal> {
        self.source.own(i)?;
        Ok(self.target.generate_ideal(self.image_of(i.members())))
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &SemiringHom) -> Result<SemiringHom> {
        if g.source.id() != self.target.id() {
            return Err(Error::ParentMismatch);
        }
        Ok(SemiringHom {
            source: Arc::clone(&self.source),
            target: Arc::clone(&g.target),
            map: self.map.iter().map(|&e| g.map[e]).collect(),
        })
    }

    /// Parse a map written as `src:dst` pairs, e.g. `0:0,s:1,1:1`, using
    /// element names or indices on both sides.
    pub fn parse_map(
        source: &FiniteSemiring,
        target: &FiniteSemiring,
        spec: &str,
    ) -> Result<Vec<Element>> {
        let mut map = vec![None; source.size()];
        for pair in split_top_level(spec) {
            let (from, to) = rsplit_colon(&pair)
                .ok_or_else(|| Error::Parse(format!("expected src:dst, got {pair:?}")))?;
            let from = source.element_by_name(from)?;
            let to = target.element_by_name(to)?;
            map[from] = Some(to);
        }
        map.into_iter()
            .enumerate()
            .map(|(e, v)| {
                v.ok_or_else(|| {
                    Error::Parse(format!("no image given for {}", source.element_name(e)))
                })
            })
            .collect()
    }
}

/// Split on commas that are not inside parentheses.
pub fn split_top_level(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for c in s.chars() {
        match c {
            '(' | '[' | '{' => {
                depth += 1;
                current.push(c);
            }
            ')' | ']' | '}' => {
                depth -= 1;
                current.push(c);
            }
            ',' if depth == 0 => out.push(std::mem::take(&mut current)),
            _ => current.push(c),
        }
    }
    out.push(current);
    out.into_iter()
        .map(|t| t.trim().to_string())
        .filter(|t| !t.is_empty())
        .collect()
}

fn rsplit_colon(pair: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in pair.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ':' if depth == 0 => return Some((pair[..i].trim(), pair[i + 1..].trim())),
            _ => {}
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    fn l3_and_b() -> (Arc<FiniteSemiring>, Arc<FiniteSemiring>) {
        (Arc::new(gallery::chain(3)), Arc::new(gallery::boolean()))
    }

    fn gamma(l3: &Arc<FiniteSemiring>, b: &Arc<FiniteSemiring>) -> SemiringHom {
        let map = SemiringHom::parse_map(l3, b, "0:0,s:1,1:1").unwrap();
        validate_hom(l3, b, map).unwrap()
    }

    #[test]
    fn kernel_zero_but_not_injective() {
        let (l3, b) = l3_and_b();
        let g = gamma(&l3, &b);
        assert_eq!(g.kernel(), l3.zero_ideal());
        assert!(!g.is_injective());
    }

    #[test]
    fn identity_is_valid() {
        let (l3, _) = l3_and_b();
        let id = validate_hom(&l3, &l3, l3.elements().collect()).unwrap();
        assert_eq!(id.kernel(), l3.zero_ideal());
    }

    #[test]
    fn collapsing_s_to_zero_is_still_a_hom() {
        // 0 ↦ 0, s ↦ 0, 1 ↦ 1 is monotone, so it preserves max and min
        let (l3, b) = l3_and_b();
        let map = SemiringHom::parse_map(&l3, &b, "0:0,s:0,1:1").unwrap();
        let h = validate_hom(&l3, &b, map).unwrap();
        let s = l3.element_by_name("s").unwrap();
        assert_eq!(h.kernel(), l3.principal(s));
    }

    #[test]
    fn swapping_constants_is_rejected() {
        let (l3, b) = l3_and_b();
        let map = SemiringHom::parse_map(&l3, &b, "0:0,s:1,1:0").unwrap();
        match validate_hom(&l3, &b, map) {
            Err(Error::HomViolation { violations }) => {
                assert!(violations.iter().any(|v| v.law == law::ONE));
            }
            other => panic!("expected violation, got {other:?}"),
        }
    }

    #[test]
    fn projection_contract_and_extend() {
        let b = Arc::new(gallery::boolean());
        let bb = Arc::new(gallery::by_name("BxB").unwrap());
        let e = |n: &str| bb.element_by_name(n).unwrap();
        let first = bb
            .elements()
            .map(|x| usize::from(bb.element_name(x).starts_with("(1")))
            .collect();
        let proj = validate_hom(&bb, &b, first).unwrap();
        let zero_b = bb
            .ideal([e("(0,0)"), e("(0,1)")].into_iter().collect())
            .unwrap();
        let b_zero = bb
            .ideal([e("(0,0)"), e("(1,0)")].into_iter().collect())
            .unwrap();
        assert_eq!(proj.kernel(), zero_b);
        assert_eq!(proj.contract(&b.zero_ideal()).unwrap(), zero_b);
        assert_eq!(proj.extend(&b_zero).unwrap(), b.unit_ideal());
        assert_eq!(proj.extend(&bb.zero_ideal()).unwrap(), b.zero_ideal());
    }

    #[test]
    fn gamma_extension_and_contraction() {
        let (l3, b) = l3_and_b();
        let g = gamma(&l3, &b);
        let s = l3.element_by_name("s").unwrap();
        let i = l3.principal(s);
        let ie = g.extend(&i).unwrap();
        assert_eq!(ie, b.unit_ideal());
        assert_eq!(g.contract(&ie).unwrap(), l3.unit_ideal());
        assert_eq!(g.contract(&b.unit_ideal()).unwrap(), l3.unit_ideal());
    }

    #[test]
    fn enumeration_finds_projections() {
        let b = Arc::new(gallery::boolean());
        let bb = Arc::new(gallery::by_name("BxB").unwrap());
        let homs = enumerate_homs(&bb, &b);
        assert_eq!(homs.len(), 2);
        for h in &homs {
            validate_hom(&bb, &b, h.map().to_vec()).unwrap();
        }
        // B → L3 has exactly the inclusion
        let l3 = Arc::new(gallery::chain(3));
        assert_eq!(enumerate_homs(&b, &l3).len(), 1);
    }

    #[test]
    fn top_level_split() {
        assert_eq!(split_top_level("(1,0), (0,1)"), vec!["(1,0)", "(0,1)"]);
        assert_eq!(split_top_level("s"), vec!["s"]);
        assert!(split_top_level("").is_empty());
    }
}
