//! Semirings of fractions `S_U` built as explicit finite quotients of
//! `S × U`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideals::Ideal;
use crate::morphisms::SemiringHom;
use crate::semiring::{Element, FiniteSemiring, ONE, ZERO};
use crate::spectrum::McSet;
use crate::set::ElementSet;

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

/// Partition of `X × U` into fraction classes.
///
/// Pairs are indexed `x * |U| + k` where `k` is the position of the
/// denominator in `denominators`. Classes are numbered by their least
/// representative `(x, u)` in lexicographic order.
#[derive(Debug, Clone)]
pub(crate) struct FractionClasses {
    pub(crate) class_of: Vec<usize>,
    pub(crate) representatives: Vec<(usize, Element)>,
}

/// Build the classes of `(x, u) ~ (y, v) ⇔ ∃t ∈ U: t·v·x = t·u·y` where
/// `scale(s, x)` is the action of a scalar on a numerator.
///
/// Classes come from a union-find pass over the directly related pairs;
/// transitivity is then verified rather than assumed, by checking that
/// every two pairs sharing a class are directly related.
pub(crate) fn fraction_classes(
    ring: &FiniteSemiring,
    denominators: &[Element],
    numerators: usize,
    scale: impl Fn(Element, usize) -> usize,
) -> Result<FractionClasses> {
    let k = denominators.len();
    let total = numerators * k;
    let related = |p: usize, q: usize| {
        let (x, u) = (p / k, denominators[p % k]);
        let (y, v) = (q / k, denominators[q % k]);
        denominators
            .iter()
            .any(|&t| scale(ring.mul(t, v), x) == scale(ring.mul(t, u), y))
    };
    let mut direct = vec![false; total * total];
    let mut uf = UnionFind::new(total);
    for p in 0..total {
        for q in 0..total {
            if related(p, q) {
                direct[p * total + q] = true;
                uf.union(p, q);
            }
        }
    }
    for p in 0..total {
        if !direct[p * total + p] {
            return Err(Error::PostconditionFailed(format!(
                "fraction relation is not reflexive at pair {p}"
            )));
        }
        for q in 0..total {
            if direct[p * total + q] != direct[q * total + p] {
                return Err(Error::PostconditionFailed(
                    "fraction relation is not symmetric".into(),
                ));
            }
            if uf.find(p) == uf.find(q) && !direct[p * total + q] {
                return Err(Error::PostconditionFailed(
                    "fraction relation is not transitive".into(),
                ));
            }
        }
    }
    // pairs are visited in lexicographic order, so first sight of a root is
    // its least representative
    let mut class_index = vec![usize::MAX; total];
    let mut class_of = vec![0; total];
    let mut representatives = Vec::new();
    for p in 0..total {
        let root = uf.find(p);
        if class_index[root] == usize::MAX {
            class_index[root] = representatives.len();
            representatives.push((p / k, denominators[p % k]));
        }
        class_of[p] = class_index[root];
    }
    Ok(FractionClasses {
        class_of,
        representatives,
    })
}

/// `S_U` together with the class map `S × U → S_U` and `γ: a ↦ a/1`.
#[derive(Debug, Clone)]
pub struct LocalizationResult {
    base: Arc<FiniteSemiring>,
    mcset: McSet,
    denominators: Vec<Element>,
    quotient: Arc<FiniteSemiring>,
    class_table: Vec<Element>,
    representatives: Vec<(Element, Element)>,
    gamma: SemiringHom,
}

/// Construct `S_U`.
///
/// Elements of the quotient are numbered by least representative, so
/// `0/1` is element 0 and `1/1` is element 1. Sums and products are read
/// off representatives and checked to be independent of that choice.
pub fn localize(base: &Arc<FiniteSemiring>, mcset: &McSet) -> Result<LocalizationResult> {
    if mcset.parent() != base.id() {
        return Err(Error::ParentMismatch);
    }
    base.mc_set(mcset.members())?;
    if mcset.contains(ZERO) {
        return Err(Error::DegenerateLocalization);
    }
    let denominators: Vec<Element> = mcset.members().iter().collect();
    let k = denominators.len();
    let classes = fraction_classes(base, &denominators, base.size(), |s, x| base.mul(s, x))?;
    let n = classes.representatives.len();
    let position = |u: Element| denominators.binary_search(&u).expect("denominator");
    let class = |x: Element, u: Element| classes.class_of[x * k + position(u)];

    let mut add = vec![usize::MAX; n * n];
    let mut mul = vec![usize::MAX; n * n];
    for p in 0..base.size() * k {
        for q in 0..base.size() * k {
            let (x, u) = (p / k, denominators[p % k]);
            let (y, v) = (q / k, denominators[q % k]);
            let (a, b) = (classes.class_of[p], classes.class_of[q]);
            let uv = base.mul(u, v);
            let sum = class(base.add(base.mul(x, v), base.mul(y, u)), uv);
            let prod = class(base.mul(x, y), uv);
            for (table, value, op) in [(&mut add, sum, "sum"), (&mut mul, prod, "product")] {
                let slot = &mut table[a * n + b];
                if *slot == usize::MAX {
                    *slot = value;
                } else if *slot != value {
                    return Err(Error::PostconditionFailed(format!(
                        "fraction {op} depends on the choice of representatives"
                    )));
                }
            }
        }
    }
    debug_assert_eq!(class(ZERO, ONE), ZERO);
    debug_assert_eq!(class(ONE, ONE), ONE);

    let names: Vec<String> = classes
        .representatives
        .iter()
        .map(|&(x, u)| format!("{}/{}", base.element_name(x), base.element_name(u)))
        .collect();
    let raw = crate::semiring::RawSemiring {
        name: Some(format!("{}_{}", base.name(), base.format_set(mcset.members()))),
        size: n,
        elements: Some(names),
        add: add.chunks(n).map(<[_]>::to_vec).collect(),
        mul: mul.chunks(n).map(<[_]>::to_vec).collect(),
        zero: class(ZERO, ONE),
        one: class(ONE, ONE),
    };
    let quotient = Arc::new(crate::semiring::validate_semiring(&raw)?);
    let gamma_map: Vec<Element> = base.elements().map(|a| class(a, ONE)).collect();
    let gamma = crate::morphisms::validate_hom(base, &quotient, gamma_map)?;

    Ok(LocalizationResult {
        base: Arc::clone(base),
        mcset: *mcset,
        denominators,
        quotient,
        class_table: classes.class_of,
        representatives: classes.representatives,
        gamma,
    })
}

impl LocalizationResult {
    pub fn base(&self) -> &Arc<FiniteSemiring> {
        &self.base
    }

    pub fn mcset(&self) -> &McSet {
        &self.mcset
    }

    pub fn denominators(&self) -> &[Element] {
        &self.denominators
    }

    pub fn quotient(&self) -> &Arc<FiniteSemiring> {
        &self.quotient
    }

    pub fn gamma(&self) -> &SemiringHom {
        &self.gamma
    }

    /// Least representative `(x, u)` of each quotient element.
    pub fn representatives(&self) -> &[(Element, Element)] {
        &self.representatives
    }

    /// The class `x/u`.
    pub fn class_of(&self, x: Element, u: Element) -> Result<Element> {
        let k = self
            .denominators
            .binary_search(&u)
            .map_err(|_| Error::PreconditionViolated(format!("{u} is not in the MC-set")))?;
        if x >= self.base.size() {
            return Err(Error::UnknownElement(x.to_string()));
        }
        Ok(self.class_table[x * self.denominators.len() + k])
    }

    /// Whether `(x, u) ~ (y, v)` directly from the defining relation.
    pub fn related(&self, (x, u): (Element, Element), (y, v): (Element, Element)) -> bool {
        let s = &self.base;
        self.denominators
            .iter()
            .any(|&t| s.mul(s.mul(t, v), x) == s.mul(s.mul(t, u), y))
    }

    /// `I_U = {x/u : x ∈ I, u ∈ U}`; checked to coincide with `γ(I)·S_U`.
    pub fn localize_ideal(&self, i: &Ideal) -> Result<Ideal> {
        self.base.own(i)?;
        let mut members = ElementSet::EMPTY;
        for x in i.members() {
            for &u in &self.denominators {
                members.insert(self.class_of(x, u)?);
            }
        }
        let localized = self.quotient.ideal(members).map_err(|_| {
            Error::PostconditionFailed(format!(
                "localization of {} is not an ideal",
                self.base.format_ideal(i)
            ))
        })?;
        let extended = self.gamma.extend(i)?;
        if extended != localized {
            return Err(Error::PostconditionFailed(format!(
                "I_U = {} but I·S_U = {}",
                self.quotient.format_ideal(&localized),
                self.quotient.format_ideal(&extended)
            )));
        }
        Ok(localized)
    }

    /// `Jᶜ = γ⁻¹(J)` for an ideal of `S_U`.
    pub fn contract(&self, j: &Ideal) -> Result<Ideal> {
        self.gamma.contract(j)
    }

    /// Primes of `S` disjoint from `U` paired with primes of `S_U` via
    /// `P ↦ P_U`; both composites are checked to be identities and the
    /// map is checked to be onto `Spec(S_U)`.
    pub fn prime_correspondence(&self) -> Result<Vec<(Ideal, Ideal)>> {
        let disjoint: Vec<Ideal> = self
            .base
            .spectrum()
            .primes()
            .iter()
            .filter(|p| p.members().is_disjoint(self.mcset.members()))
            .copied()
            .collect();
        let mut pairs = Vec::with_capacity(disjoint.len());
        for p in disjoint {
            let q = self.localize_ideal(&p)?;
            if !self.quotient.is_prime(&q)? {
                return Err(Error::CorrespondenceFailure(format!(
                    "{} localizes to the non-prime {}",
                    self.base.format_ideal(&p),
                    self.quotient.format_ideal(&q)
                )));
            }
            if self.contract(&q)? != p {
                return Err(Error::CorrespondenceFailure(format!(
                    "{} is not recovered from its localization",
                    self.base.format_ideal(&p)
                )));
            }
            pairs.push((p, q));
        }
        let quotient_primes = self.quotient.spectrum().primes().to_vec();
        for q in &quotient_primes {
            let p = self.contract(q)?;
            if self.localize_ideal(&p)? != *q || !pairs.iter().any(|(_, image)| image == q) {
                return Err(Error::CorrespondenceFailure(format!(
                    "prime {} of the quotient has no preimage",
                    self.quotient.format_ideal(q)
                )));
            }
        }
        if quotient_primes.len() != pairs.len() {
            return Err(Error::CorrespondenceFailure(
                "the correspondence is not injective".into(),
            ));
        }
        Ok(pairs)
    }
}

/// `S_P`: localization at `W = S − P`, checked to be local with maximal
/// ideal `PS_P` whose complement is exactly the units of `S_P`.
pub fn localize_at_prime(base: &Arc<FiniteSemiring>, p: &Ideal) -> Result<LocalizationResult> {
    let w = base.prime_complement(p)?;
    let loc = localize(base, &w)?;
    let maximal = loc.localize_ideal(p)?;
    let quotient = loc.quotient();
    match quotient.local_ideal()? {
        Some(m) if m == maximal => {}
        _ => {
            return Err(Error::PostconditionFailed(format!(
                "{} is not the unique maximal ideal of the localization",
                quotient.format_ideal(&maximal)
            )))
        }
    }
    if quotient.units() != maximal.members().complement(quotient.size()) {
        return Err(Error::PostconditionFailed(
            "units of S_P differ from the complement of PS_P".into(),
        ));
    }
    Ok(loc)
}
