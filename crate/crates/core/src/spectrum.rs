//! Prime, maximal, primary and irreducible ideals; `Spec(S)`, `Max(S)`,
//! Zariski closed sets and multiplicatively closed sets.

use crate::error::{Error, Result};
use crate::ideals::Ideal;
use crate::semiring::{Element, FiniteSemiring, SemiringId, ONE, ZERO};
use crate::set::ElementSet;

/// `Spec(S)` together with `Max(S)`, both in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    parent: SemiringId,
    primes: Vec<Ideal>,
    maximals: Vec<Ideal>,
}

impl Spectrum {
    pub fn parent(&self) -> SemiringId {
        self.parent
    }

    pub fn primes(&self) -> &[Ideal] {
        &self.primes
    }

    pub fn maximals(&self) -> &[Ideal] {
        &self.maximals
    }
}

/// A multiplicatively closed subset: contains `1` and is closed under `·`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct McSet {
    parent: SemiringId,
    members: ElementSet,
}

impl McSet {
    pub fn parent(&self) -> SemiringId {
        self.parent
    }

    pub fn members(&self) -> ElementSet {
        self.members
    }

    pub fn contains(&self, e: Element) -> bool {
        self.members.contains(e)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl FiniteSemiring {
    pub fn is_mc_set(&self, set: ElementSet) -> bool {
        set.contains(ONE)
            && set.is_subset(self.all())
            && set
                .iter()
                .all(|a| set.iter().all(|b| set.contains(self.mul(a, b))))
    }

    pub fn mc_set(&self, set: ElementSet) -> Result<McSet> {
        if !set.is_subset(self.all()) {
            return Err(Error::InvalidMcSet(format!("{set:?} is not a subset of S")));
        }
        if !set.contains(ONE) {
            return Err(Error::InvalidMcSet("the one is missing".into()));
        }
        for a in set {
            for b in set {
                if !set.contains(self.mul(a, b)) {
                    return Err(Error::InvalidMcSet(format!(
                        "{} · {} leaves the set",
                        self.element_name(a),
                        self.element_name(b)
                    )));
                }
            }
        }
        Ok(McSet {
            parent: self.id(),
            members: set,
        })
    }

    /// The multiplicative submonoid generated by `set`.
    pub fn mc_closure(&self, set: ElementSet) -> McSet {
        let mut closed = set.with(ONE);
        loop {
            let mut next = closed;
            for a in closed {
                for b in closed {
                    next.insert(self.mul(a, b));
                }
            }
            if next == closed {
                return McSet {
                    parent: self.id(),
                    members: closed,
                };
            }
            closed = next;
        }
    }

    /// All MC-sets with at most `max_len` members, in canonical order.
    pub fn mc_sets_up_to(&self, max_len: usize) -> Vec<McSet> {
        let others: Vec<Element> = self.elements().filter(|&e| e != ONE).collect();
        let mut out = Vec::new();
        let mut stack = vec![(ElementSet::singleton(ONE), 0usize)];
        while let Some((set, next)) = stack.pop() {
            if self.is_mc_set(set) {
                out.push(McSet {
                    parent: self.id(),
                    members: set,
                });
            }
            if set.len() == max_len {
                continue;
            }
            for (k, &e) in others.iter().enumerate().skip(next) {
                stack.push((set.with(e), k + 1));
            }
        }
        out.sort();
        out
    }

    /// `S − P` for a prime `P`.
    pub fn prime_complement(&self, p: &Ideal) -> Result<McSet> {
        if !self.is_prime(p)? {
            return Err(Error::NotPrime);
        }
        self.mc_set(p.members().complement(self.size()))
    }

    /// A pair `(a, b)` with `ab ∈ P` but `a, b ∉ P`, if any.
    pub fn prime_witness(&self, p: &Ideal) -> Result<Option<(Element, Element)>> {
        self.own(p)?;
        for a in self.elements().filter(|&a| !p.contains(a)) {
            for b in self.elements().filter(|&b| !p.contains(b)) {
                if p.contains(self.mul(a, b)) {
                    return Ok(Some((a, b)));
                }
            }
        }
        Ok(None)
    }

    /// Proper, and `ab ∈ P` implies `a ∈ P` or `b ∈ P`.
    pub fn is_prime(&self, p: &Ideal) -> Result<bool> {
        Ok(p.is_proper() && self.prime_witness(p)?.is_none())
    }

    /// Proper, and `IJ ⊆ P` implies `I ⊆ P` or `J ⊆ P` over `Id(S)`.
    pub fn is_prime_by_ideals(&self, p: &Ideal) -> Result<bool> {
        self.own(p)?;
        if !p.is_proper() {
            return Ok(false);
        }
        let lattice = self.ideals();
        for i in lattice {
            for j in lattice {
                if self.mul_ideals(i, j)?.is_subset(p) && !i.is_subset(p) && !j.is_subset(p) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Proper, with no ideal strictly between `m` and `S`.
    pub fn is_maximal(&self, m: &Ideal) -> Result<bool> {
        self.own(m)?;
        if !m.is_proper() {
            return Ok(false);
        }
        Ok(!self
            .ideals()
            .iter()
            .any(|i| m.is_subset(i) && i != m && i.is_proper()))
    }

    /// Proper, and `xy ∈ Q` implies `x ∈ Q` or `yⁿ ∈ Q` for some `n`.
    pub fn is_primary(&self, q: &Ideal) -> Result<bool> {
        self.own(q)?;
        if !q.is_proper() {
            return Ok(false);
        }
        let radical = self.radical(q)?;
        for x in self.elements().filter(|&x| !q.contains(x)) {
            for y in self.elements().filter(|&y| !radical.contains(y)) {
                if q.contains(self.mul(x, y)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// A pair `(J, K)` of ideals with `I = J ∩ K` and `J ≠ I ≠ K`, taking
    /// the least such pair in canonical order.
    pub fn reducing_pair(&self, i: &Ideal) -> Result<Option<(Ideal, Ideal)>> {
        self.own(i)?;
        let above: Vec<Ideal> = self
            .ideals()
            .iter()
            .filter(|j| i.is_subset(j) && *j != i)
            .copied()
            .collect();
        for (a, j) in above.iter().enumerate() {
            for k in &above[a + 1..] {
                if j.members().intersection(k.members()) == i.members() {
                    return Ok(Some((*j, *k)));
                }
            }
        }
        Ok(None)
    }

    /// `I = J ∩ K` implies `I = J` or `I = K`.
    pub fn is_irreducible(&self, i: &Ideal) -> Result<bool> {
        Ok(self.reducing_pair(i)?.is_none())
    }

    /// `Spec(S)` and `Max(S)` filtered from the cached ideal lattice.
    pub fn spectrum(&self) -> &Spectrum {
        self.spectrum_cache.get_or_init(|| {
            let lattice = self.ideals();
            let primes = lattice
                .iter()
                .filter(|p| self.is_prime(p).unwrap_or(false))
                .copied()
                .collect();
            let maximals = lattice
                .iter()
                .filter(|m| self.is_maximal(m).unwrap_or(false))
                .copied()
                .collect();
            Spectrum {
                parent: self.id(),
                primes,
                maximals,
            }
        })
    }

    /// `V(I)`: primes containing `I`.
    pub fn v_of(&self, i: &Ideal) -> Result<Vec<Ideal>> {
        self.own(i)?;
        Ok(self
            .spectrum()
            .primes
            .iter()
            .copied()
            .filter(|p| i.is_subset(p))
            .collect())
    }

    /// The ⊆-maximal ideals disjoint from `w`; each is checked to be prime.
    pub fn maximal_disjoint_ideals(&self, w: &McSet) -> Result<Vec<Ideal>> {
        if w.parent() != self.id() {
            return Err(Error::ParentMismatch);
        }
        if w.contains(ZERO) {
            return Err(Error::EmptyFamily);
        }
        let disjoint: Vec<Ideal> = self
            .ideals()
            .iter()
            .filter(|i| i.members().is_disjoint(w.members()))
            .copied()
            .collect();
        let maximal: Vec<Ideal> = maximal_elements(&disjoint);
        for p in &maximal {
            if !self.is_prime(p)? {
                return Err(Error::PostconditionFailed(format!(
                    "maximal ideal {} disjoint from {} is not prime",
                    self.format_ideal(p),
                    self.format_set(w.members())
                )));
            }
        }
        Ok(maximal)
    }

    /// `I + J = S`.
    pub fn is_comaximal(&self, i: &Ideal, j: &Ideal) -> Result<bool> {
        Ok(!self.add_ideals(i, j)?.is_proper())
    }

    /// The unique maximal ideal when `S` is local; it is checked to equal
    /// `S − U(S)`.
    pub fn local_ideal(&self) -> Result<Option<Ideal>> {
        let spectrum = self.spectrum();
        match spectrum.maximals.as_slice() {
            [m] => {
                let nonunits = self.units().complement(self.size());
                if m.members() != nonunits {
                    return Err(Error::PostconditionFailed(format!(
                        "unique maximal ideal {} differs from the non-units {}",
                        self.format_ideal(m),
                        self.format_set(nonunits)
                    )));
                }
                Ok(Some(*m))
            }
            _ => Ok(None),
        }
    }

    pub fn is_local(&self) -> bool {
        self.spectrum().maximals.len() == 1
    }
}

/// ⊆-maximal members of a family of ideals, preserving order.
pub fn maximal_elements(family: &[Ideal]) -> Vec<Ideal> {
    family
        .iter()
        .filter(|i| !family.iter().any(|j| j != *i && i.is_subset(j)))
        .copied()
        .collect()
}

/// ⊆-minimal members of a family of ideals, preserving order and dropping
/// duplicates.
pub fn minimal_elements(family: &[Ideal]) -> Vec<Ideal> {
    let mut out: Vec<Ideal> = family
        .iter()
        .filter(|i| !family.iter().any(|j| j != *i && j.is_subset(i)))
        .copied()
        .collect();
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    fn set(items: &[usize]) -> ElementSet {
        items.iter().copied().collect()
    }

    fn bb() -> (FiniteSemiring, Ideal, Ideal) {
        let bb = gallery::by_name("BxB").unwrap();
        let e = |n: &str| bb.element_by_name(n).unwrap();
        let zero_b = bb.ideal(set(&[e("(0,0)"), e("(0,1)")])).unwrap();
        let b_zero = bb.ideal(set(&[e("(0,0)"), e("(1,0)")])).unwrap();
        (bb, zero_b, b_zero)
    }

    #[test]
    fn prime_examples() {
        let b = gallery::boolean();
        assert!(b.is_prime(&b.zero_ideal()).unwrap());
        assert!(!b.is_prime(&b.unit_ideal()).unwrap());
        let (bb, _, _) = bb();
        let witness = bb.prime_witness(&bb.zero_ideal()).unwrap().unwrap();
        assert_eq!(bb.mul(witness.0, witness.1), 0);
        assert!(!bb.is_prime(&bb.zero_ideal()).unwrap());
        assert!(!bb.is_prime_by_ideals(&bb.zero_ideal()).unwrap());
    }

    #[test]
    fn maximal_examples() {
        let l3 = gallery::chain(3);
        let s = l3.element_by_name("s").unwrap();
        assert!(l3.is_maximal(&l3.principal(s)).unwrap());
        assert!(!l3.is_maximal(&l3.zero_ideal()).unwrap());
        let b = gallery::boolean();
        assert!(b.is_maximal(&b.zero_ideal()).unwrap());
        assert!(b.is_semifield());
    }

    #[test]
    fn primary_examples() {
        let (bb, zero_b, _) = bb();
        assert!(!bb.is_primary(&bb.zero_ideal()).unwrap());
        assert!(bb.is_primary(&zero_b).unwrap());
        let l3 = gallery::chain(3);
        assert!(l3.is_primary(&l3.zero_ideal()).unwrap());
    }

    #[test]
    fn irreducible_examples() {
        let (bb, zero_b, b_zero) = bb();
        assert_eq!(
            bb.reducing_pair(&bb.zero_ideal()).unwrap(),
            Some((zero_b.min(b_zero), zero_b.max(b_zero)))
        );
        assert!(bb.is_irreducible(&zero_b).unwrap());
        for n in 2..=6 {
            let chain = gallery::chain(n);
            for i in chain.ideals() {
                assert!(chain.is_irreducible(i).unwrap());
            }
        }
    }

    #[test]
    fn spectra() {
        let b = gallery::boolean();
        let sp = b.spectrum();
        assert_eq!(sp.primes(), &[b.zero_ideal()]);
        assert_eq!(sp.maximals(), &[b.zero_ideal()]);

        let l3 = gallery::chain(3);
        let s = l3.element_by_name("s").unwrap();
        let sp = l3.spectrum();
        assert_eq!(sp.primes(), &[l3.zero_ideal(), l3.principal(s)]);
        assert_eq!(sp.maximals(), &[l3.principal(s)]);
        assert!(l3.v_of(&l3.unit_ideal()).unwrap().is_empty());
    }

    #[test]
    fn maximal_disjoint_examples() {
        let l3 = gallery::chain(3);
        let s = l3.element_by_name("s").unwrap();
        let w = l3.mc_set(set(&[s, 1])).unwrap();
        assert_eq!(l3.maximal_disjoint_ideals(&w).unwrap(), vec![l3.zero_ideal()]);
        let unit = l3.mc_set(set(&[1])).unwrap();
        assert_eq!(
            l3.maximal_disjoint_ideals(&unit).unwrap(),
            l3.spectrum().maximals()
        );

        let (bb, zero_b, b_zero) = bb();
        let w = bb.mc_set(set(&[1])).unwrap();
        let mut expected = vec![zero_b, b_zero];
        expected.sort();
        assert_eq!(bb.maximal_disjoint_ideals(&w).unwrap(), expected);

        let with_zero = l3.mc_set(set(&[0, 1])).unwrap();
        assert!(matches!(
            l3.maximal_disjoint_ideals(&with_zero),
            Err(Error::EmptyFamily)
        ));
    }

    #[test]
    fn comaximal_and_local() {
        let (bb, zero_b, b_zero) = bb();
        assert!(bb.is_comaximal(&zero_b, &b_zero).unwrap());
        assert_eq!(bb.local_ideal().unwrap(), None);

        let l3 = gallery::chain(3);
        let s = l3.element_by_name("s").unwrap();
        assert!(!l3.is_comaximal(&l3.zero_ideal(), &l3.principal(s)).unwrap());
        assert!(l3.is_comaximal(&l3.unit_ideal(), &l3.zero_ideal()).unwrap());
        assert_eq!(l3.local_ideal().unwrap(), Some(l3.principal(s)));

        let b = gallery::boolean();
        assert_eq!(b.local_ideal().unwrap(), Some(b.zero_ideal()));
    }

    #[test]
    fn mc_sets_are_enumerated() {
        let l3 = gallery::chain(3);
        // every subset of L3 containing 1 is closed under min
        assert_eq!(l3.mc_sets_up_to(3).len(), 4);
        let bb = gallery::by_name("BxB").unwrap();
        for w in bb.mc_sets_up_to(4) {
            assert!(bb.is_mc_set(w.members()));
        }
        assert!(bb.mc_set(set(&[0])).is_err());
    }
}
