//! Finite commutative semirings given by Cayley tables.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Violation};
use crate::set::{ElementSet, MAX_ELEMENTS};

/// Element of a finite semiring, identified by its index.
pub type Element = usize;

/// Default cap on semiring size for file input and ideal enumeration.
pub const DEFAULT_SIZE_CAP: usize = 9;

/// Index of the additive identity after canonicalization.
pub const ZERO: Element = 0;
/// Index of the multiplicative identity after canonicalization.
pub const ONE: Element = 1;

/// Fingerprint of a semiring's tables; ideals and other derived objects
/// carry it so that operands from different semirings are rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemiringId(u64);

/// Table-level description of a semiring, as stored in definition files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawSemiring {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
}

/// Axiom names reported by [`validate_semiring`].
pub mod law {
    pub const ADD_ASSOCIATIVE: &str = "additive associativity";
    pub const ADD_COMMUTATIVE: &str = "additive commutativity";
    pub const ADD_IDENTITY: &str = "additive identity";
    pub const MUL_ASSOCIATIVE: &str = "multiplicative associativity";
    pub const MUL_COMMUTATIVE: &str = "multiplicative commutativity";
    pub const MUL_IDENTITY: &str = "multiplicative identity";
    pub const DISTRIBUTIVE: &str = "distributivity";
    pub const ABSORPTION: &str = "absorption";

    pub const ALL: [&str; 8] = [
        ADD_ASSOCIATIVE,
        ADD_COMMUTATIVE,
        ADD_IDENTITY,
        MUL_ASSOCIATIVE,
        MUL_COMMUTATIVE,
        MUL_IDENTITY,
        DISTRIBUTIVE,
        ABSORPTION,
    ];
}

/// A validated finite commutative semiring on `{0, …, n-1}` with `0` the
/// additive and `1` the multiplicative identity.
///
/// Immutable after construction. The ideal lattice is computed lazily and
/// cached; the cache is write-once, so shared references are safe to use
/// from several threads.
#[derive(Clone)]
pub struct FiniteSemiring {
    size: usize,
    add: Vec<Element>,
    mul: Vec<Element>,
    name: Option<String>,
    names: Vec<String>,
    id: SemiringId,
    pub(crate) ideal_cache: OnceLock<crate::ideals::IdealLattice>,
    pub(crate) spectrum_cache: OnceLock<crate::spectrum::Spectrum>,
}

impl fmt::Debug for FiniteSemiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSemiring")
            .field("name", &self.name)
            .field("size", &self.size)
            .field("elements", &self.names)
            .finish()
    }
}

impl PartialEq for FiniteSemiring {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.add == other.add && self.mul == other.mul
    }
}

impl Eq for FiniteSemiring {}

/// Validate raw tables and build a canonical [`FiniteSemiring`].
///
/// Every violated law is reported with its least witness (in the input's
/// own indexing). On success the carrier is relabelled so that the zero
/// becomes index 0 and the one becomes index 1; the remaining elements
/// keep their relative order.
pub fn validate_semiring(raw: &RawSemiring) -> Result<FiniteSemiring> {
    let n = raw.size;
    check_shape(raw)?;
    if raw.zero == raw.one {
        return Err(Error::ZeroEqualsOne);
    }
    let add = |a: usize, b: usize| raw.add[a][b];
    let mul = |a: usize, b: usize| raw.mul[a][b];
    let violations = axiom_violations(n, raw.zero, raw.one, add, mul);
    if !violations.is_empty() {
        return Err(Error::AxiomViolation { violations });
    }

    let mut order = vec![raw.zero, raw.one];
    order.extend((0..n).filter(|&e| e != raw.zero && e != raw.one));
    let mut position = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        position[old] = new;
    }
    let mut add_t = vec![0; n * n];
    let mut mul_t = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            add_t[a * n + b] = position[raw.add[order[a]][order[b]]];
            mul_t[a * n + b] = position[raw.mul[order[a]][order[b]]];
        }
    }
    let names = match &raw.elements {
        Some(names) => order.iter().map(|&old| names[old].clone()).collect(),
        None => order.iter().map(|old| old.to_string()).collect(),
    };
    Ok(FiniteSemiring::from_canonical(
        raw.name.clone(),
        names,
        add_t,
        mul_t,
    ))
}

fn check_shape(raw: &RawSemiring) -> Result<()> {
    let n = raw.size;
    if n == 0 {
        return Err(Error::MalformedTable("size must be positive".into()));
    }
    if n > MAX_ELEMENTS {
        return Err(Error::SizeCapExceeded {
            size: n,
            cap: MAX_ELEMENTS,
        });
    }
    for (label, table) in [("add", &raw.add), ("mul", &raw.mul)] {
        if table.len() != n {
            return Err(Error::MalformedTable(format!(
                "{label} has {} rows, expected {n}",
                table.len()
            )));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!(
                    "{label} row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::MalformedTable(format!(
                    "{label} row {i} contains out-of-range entry {bad}"
                )));
            }
        }
    }
    if raw.zero >= n || raw.one >= n {
        return Err(Error::MalformedTable(
            "zero/one index out of range".into(),
        ));
    }
    if let Some(names) = &raw.elements {
        if names.len() != n {
            return Err(Error::MalformedTable(format!(
                "{} element names for {n} elements",
                names.len()
            )));
        }
        let mut sorted: Vec<_> = names.iter().collect();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != n {
            return Err(Error::MalformedTable("duplicate element names".into()));
        }
    }
    Ok(())
}

/// Exhaustive O(n³) scan of the commutative-semiring axioms.
fn axiom_violations(
    n: usize,
    zero: usize,
    one: usize,
    add: impl Fn(usize, usize) -> usize,
    mul: impl Fn(usize, usize) -> usize,
) -> Vec<Violation> {
    let mut found: Vec<Violation> = Vec::new();
    let mut record = |law: &'static str, witness: Vec<usize>| {
        if !found.iter().any(|v| v.law == law) {
            found.push(Violation { law, witness });
        }
    };
    for a in 0..n {
        if add(zero, a) != a || add(a, zero) != a {
            record(law::ADD_IDENTITY, vec![a]);
        }
        if mul(one, a) != a || mul(a, one) != a {
            record(law::MUL_IDENTITY, vec![a]);
        }
        if mul(zero, a) != zero || mul(a, zero) != zero {
            record(law::ABSORPTION, vec![a]);
        }
        for b in 0..n {
            if add(a, b) != add(b, a) {
                record(law::ADD_COMMUTATIVE, vec![a, b]);
            }
            if mul(a, b) != mul(b, a) {
                record(law::MUL_COMMUTATIVE, vec![a, b]);
            }
            for c in 0..n {
                if add(add(a, b), c) != add(a, add(b, c)) {
                    record(law::ADD_ASSOCIATIVE, vec![a, b, c]);
                }
                if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                    record(law::MUL_ASSOCIATIVE, vec![a, b, c]);
                }
                if mul(a, add(b, c)) != add(mul(a, b), mul(a, c))
                    || mul(add(b, c), a) != add(mul(b, a), mul(c, a))
                {
                    record(law::DISTRIBUTIVE, vec![a, b, c]);
                }
            }
        }
    }
    found.sort_by_key(|v| law::ALL.iter().position(|&l| l == v.law));
    found
}

impl FiniteSemiring {
    /// Build from tables already in canonical form (zero = 0, one = 1).
    /// Callers must have validated the axioms.
    pub(crate) fn from_canonical(
        name: Option<String>,
        names: Vec<String>,
        add: Vec<Element>,
        mul: Vec<Element>,
    ) -> Self {
        let size = names.len();
        let mut h = DefaultHasher::new();
        size.hash(&mut h);
        add.hash(&mut h);
        mul.hash(&mut h);
        FiniteSemiring {
            size,
            add,
            mul,
            name,
            names,
            id: SemiringId(h.finish()),
            ideal_cache: OnceLock::new(),
            spectrum_cache: OnceLock::new(),
        }
    }

    /// Build from closures over `0..n`, validating the result. The closures
    /// must already place zero at 0 and one at 1.
    pub fn from_fn(
        name: &str,
        names: Vec<String>,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = names.len();
        let table = |f: &dyn Fn(usize, usize) -> usize| {
            (0..n)
                .map(|a| (0..n).map(|b| f(a, b)).collect())
                .collect::<Vec<Vec<_>>>()
        };
        validate_semiring(&RawSemiring {
            name: Some(name.to_string()),
            size: n,
            elements: Some(names),
            add: table(&add),
            mul: table(&mul),
            zero: 0,
            one: 1,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn id(&self) -> SemiringId {
        self.id
    }

    pub fn name(&self) -> &str {
        self.name.as_deref().unwrap_or("unnamed")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn element_names(&self) -> &[String] {
        &self.names
    }

    pub fn element_name(&self, e: Element) -> &str {
        &self.names[e]
    }

    /// Resolve an element by display name, falling back to a numeric index.
    pub fn element_by_name(&self, token: &str) -> Result<Element> {
        let token = token.trim();
        if let Some(e) = self.names.iter().position(|n| n == token) {
            return Ok(e);
        }
        match token.parse::<usize>() {
            Ok(e) if e < self.size => Ok(e),
            _ => Err(Error::UnknownElement(token.to_string())),
        }
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.size
    }

    pub fn all(&self) -> ElementSet {
        ElementSet::full(self.size)
    }

    pub fn zero(&self) -> Element {
        ZERO
    }

    pub fn one(&self) -> Element {
        ONE
    }

    #[inline]
    pub fn add(&self, a: Element, b: Element) -> Element {
        self.add[a * self.size + b]
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.mul[a * self.size + b]
    }

    /// `s` multiplied by itself `n` times; `pow(s, 0)` is the one.
    pub fn pow(&self, s: Element, n: u32) -> Element {
        let mut acc = ONE;
        for _ in 0..n {
            acc = self.mul(acc, s);
        }
        acc
    }

    /// The powers `s¹, …, sⁿ` with `n = |S|`. Every power of `s` occurs in
    /// this prefix, since the sequence of powers enters a cycle within `n`
    /// steps.
    pub fn powers(&self, s: Element) -> ElementSet {
        let mut acc = s;
        let mut out = ElementSet::singleton(s);
        for _ in 1..self.size {
            acc = self.mul(acc, s);
            out.insert(acc);
        }
        out
    }

    pub fn is_unit(&self, s: Element) -> bool {
        self.elements().any(|t| self.mul(s, t) == ONE)
    }

    /// `U(S)`: elements with a multiplicative inverse.
    pub fn units(&self) -> ElementSet {
        self.elements().filter(|&s| self.is_unit(s)).collect()
    }

    /// `s` is multiplicatively cancelable when `sb = sc` forces `b = c`.
    pub fn is_cancelable(&self, s: Element) -> bool {
        let images: ElementSet = self.elements().map(|b| self.mul(s, b)).collect();
        images.len() == self.size
    }

    /// Every nonzero element is a unit.
    pub fn is_semifield(&self) -> bool {
        self.units() == self.all().difference(ElementSet::singleton(ZERO))
    }

    /// Every element is additively idempotent.
    pub fn is_additively_idempotent(&self) -> bool {
        self.elements().all(|a| self.add(a, a) == a)
    }

    /// Table-level view of this semiring in canonical labelling.
    pub fn to_raw(&self) -> RawSemiring {
        let n = self.size;
        RawSemiring {
            name: self.name.clone(),
            size: n,
            elements: Some(self.names.clone()),
            add: (0..n).map(|a| (0..n).map(|b| self.add(a, b)).collect()).collect(),
            mul: (0..n).map(|a| (0..n).map(|b| self.mul(a, b)).collect()).collect(),
            zero: ZERO,
            one: ONE,
        }
    }

    /// Display a subset using element names, e.g. `{0, s}`.
    pub fn format_set(&self, set: ElementSet) -> String {
        let inner: Vec<&str> = set.iter().map(|e| self.element_name(e)).collect();
        format!("{{{}}}", inner.join(", "))
    }

    /// Re-check the axioms on the stored tables.
    pub fn revalidate(&self) -> Result<()> {
        let v = axiom_violations(self.size, ZERO, ONE, |a, b| self.add(a, b), |a, b| {
            self.mul(a, b)
        });
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::AxiomViolation { violations: v })
        }
    }
}

/// Componentwise product `S₁ × S₂`; the pair `(a, b)` is named `(a,b)`.
pub fn direct_product(left: &FiniteSemiring, right: &FiniteSemiring) -> Result<FiniteSemiring> {
    let (n, m) = (left.size(), right.size());
    if n * m > MAX_ELEMENTS {
        return Err(Error::SizeCapExceeded {
            size: n * m,
            cap: MAX_ELEMENTS,
        });
    }
    let pair = |i: usize| (i / m, i % m);
    let idx = |a: usize, b: usize| a * m + b;
    let table = |op: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
        (0..n * m)
            .map(|x| (0..n * m).map(|y| op(x, y)).collect())
            .collect()
    };
    let add = table(&|x, y| {
        let ((a, b), (c, d)) = (pair(x), pair(y));
        idx(left.add(a, c), right.add(b, d))
    });
    let mul = table(&|x, y| {
        let ((a, b), (c, d)) = (pair(x), pair(y));
        idx(left.mul(a, c), right.mul(b, d))
    });
    let names = (0..n * m)
        .map(|x| {
            let (a, b) = pair(x);
            format!("({},{})", left.element_name(a), right.element_name(b))
        })
        .collect();
    validate_semiring(&RawSemiring {
        name: Some(format!("{}x{}", left.name(), right.name())),
        size: n * m,
        elements: Some(names),
        add,
        mul,
        zero: idx(ZERO, ZERO),
        one: idx(ONE, ONE),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boolean_raw() -> RawSemiring {
        RawSemiring {
            name: Some("B".into()),
            size: 2,
            elements: None,
            add: vec![vec![0, 1], vec![1, 1]],
            mul: vec![vec![0, 0], vec![0, 1]],
            zero: 0,
            one: 1,
        }
    }

    #[test]
    fn boolean_tables_validate() {
        let b = validate_semiring(&boolean_raw()).unwrap();
        assert_eq!(b.size(), 2);
        assert_eq!(b.add(1, 1), 1);
        assert_eq!(b.mul(0, 1), 0);
    }

    #[test]
    fn patched_absorption_is_reported() {
        let mut raw = boolean_raw();
        raw.mul[0][1] = 1;
        raw.mul[1][0] = 1;
        match validate_semiring(&raw) {
            Err(Error::AxiomViolation { violations }) => {
                let abs = violations.iter().find(|v| v.law == law::ABSORPTION).unwrap();
                assert_eq!(abs.witness, vec![1]);
            }
            other => panic!("expected axiom violation, got {other:?}"),
        }
    }

    #[test]
    fn shape_errors() {
        let mut raw = boolean_raw();
        raw.add[0].push(0);
        assert!(matches!(validate_semiring(&raw), Err(Error::MalformedTable(_))));
        let mut raw = boolean_raw();
        raw.mul[1][1] = 7;
        assert!(matches!(validate_semiring(&raw), Err(Error::MalformedTable(_))));
        let mut raw = boolean_raw();
        raw.one = 0;
        assert!(matches!(validate_semiring(&raw), Err(Error::ZeroEqualsOne)));
    }

    #[test]
    fn relabels_zero_and_one() {
        // Boolean semiring with the elements stored as [1, 0].
        let raw = RawSemiring {
            name: None,
            size: 2,
            elements: Some(vec!["top".into(), "bot".into()]),
            add: vec![vec![0, 0], vec![0, 1]],
            mul: vec![vec![0, 1], vec![1, 1]],
            zero: 1,
            one: 0,
        };
        let s = validate_semiring(&raw).unwrap();
        assert_eq!(s.element_names(), ["bot", "top"]);
        assert_eq!(s.add(1, 1), 1);
        assert_eq!(s.mul(0, 1), 0);
        assert_eq!(s.to_raw().zero, 0);
    }

    #[test]
    fn saturating_naturals_validate() {
        let s = FiniteSemiring::from_fn(
            "N2",
            vec!["0".into(), "1".into(), "2".into()],
            |a, b| (a + b).min(2),
            |a, b| (a * b).min(2),
        )
        .unwrap();
        assert_eq!(s.pow(2, 2), 2);
        assert_eq!(s.units(), ElementSet::singleton(1));
    }

    #[test]
    fn product_of_booleans() {
        let b = validate_semiring(&boolean_raw()).unwrap();
        let bb = direct_product(&b, &b).unwrap();
        assert_eq!(bb.size(), 4);
        assert_eq!(bb.element_name(0), "(0,0)");
        assert_eq!(bb.element_name(1), "(1,1)");
        assert_eq!(bb.units(), ElementSet::singleton(1));
    }
}
