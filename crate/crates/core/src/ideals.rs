//! Ideals and the ideal calculus: sums, products, intersections, colons,
//! radicals, subtractive and cancellation ideals, and the lattice `Id(S)`.

use crate::error::{Error, Result};
use crate::semiring::{Element, FiniteSemiring, SemiringId, ONE, ZERO};
use crate::set::ElementSet;

/// An ideal of a particular finite semiring.
///
/// Ordered first by parent and then by the canonical subset encoding, so
/// sorting ideals of one semiring yields the canonical lattice order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    parent: SemiringId,
    members: ElementSet,
}

impl Ideal {
    pub fn parent(&self) -> SemiringId {
        self.parent
    }

    pub fn members(&self) -> ElementSet {
        self.members
    }

    pub fn contains(&self, e: Element) -> bool {
        self.members.contains(e)
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(other.members)
    }

    pub fn is_zero(&self) -> bool {
        self.members == ElementSet::singleton(ZERO)
    }

    /// Proper ideals omit the one (equivalently, every unit).
    pub fn is_proper(&self) -> bool {
        !self.members.contains(ONE)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// All ideals of a semiring in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealLattice {
    parent: SemiringId,
    ideals: Vec<Ideal>,
}

impl IdealLattice {
    pub fn parent(&self) -> SemiringId {
        self.parent
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Ideal> {
        self.ideals.iter()
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn index_of(&self, ideal: &Ideal) -> Option<usize> {
        self.ideals.binary_search(ideal).ok()
    }

    pub fn contains(&self, ideal: &Ideal) -> bool {
        self.index_of(ideal).is_some()
    }
}

impl<'a> IntoIterator for &'a IdealLattice {
    type Item = &'a Ideal;
    type IntoIter = std::slice::Iter<'a, Ideal>;

    fn into_iter(self) -> Self::IntoIter {
        self.ideals.iter()
    }
}

impl FiniteSemiring {
    pub(crate) fn wrap(&self, members: ElementSet) -> Ideal {
        Ideal {
            parent: self.id(),
            members,
        }
    }

    pub(crate) fn own(&self, ideal: &Ideal) -> Result<()> {
        if ideal.parent == self.id() {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    pub(crate) fn own2(&self, a: &Ideal, b: &Ideal) -> Result<()> {
        self.own(a)?;
        self.own(b)
    }

    /// Does `set` satisfy the ideal axioms?
    pub fn is_ideal_set(&self, set: ElementSet) -> bool {
        set.contains(ZERO)
            && set.iter().all(|a| {
                set.iter().all(|b| set.contains(self.add(a, b)))
                    && self.elements().all(|s| set.contains(self.mul(s, a)))
            })
    }

    /// Interpret `set` as an ideal, rejecting sets that are not closed.
    pub fn ideal(&self, set: ElementSet) -> Result<Ideal> {
        if !set.is_subset(self.all()) || !self.is_ideal_set(set) {
            return Err(Error::NotAnIdeal(set));
        }
        Ok(self.wrap(set))
    }

    /// `(0)`.
    pub fn zero_ideal(&self) -> Ideal {
        self.wrap(ElementSet::singleton(ZERO))
    }

    /// `S` as an ideal of itself.
    pub fn unit_ideal(&self) -> Ideal {
        self.wrap(self.all())
    }

    /// Smallest superset of `set ∪ {0}` closed under `+`.
    pub(crate) fn additive_closure(&self, set: ElementSet) -> ElementSet {
        let mut closed = set.with(ZERO);
        loop {
            let mut next = closed;
            for a in closed {
                for b in closed {
                    next.insert(self.add(a, b));
                }
            }
            if next == closed {
                return closed;
            }
            closed = next;
        }
    }

    /// `(A)`: least fixpoint of closing `A ∪ {0}` under sums and under
    /// multiplication by arbitrary elements.
    pub fn generate_ideal(&self, generators: ElementSet) -> Ideal {
        let mut closed = generators.intersection(self.all()).with(ZERO);
        loop {
            let mut next = closed;
            for a in closed {
                for s in self.elements() {
                    next.insert(self.mul(s, a));
                }
                for b in closed {
                    next.insert(self.add(a, b));
                }
            }
            if next == closed {
                return self.wrap(closed);
            }
            closed = next;
        }
    }

    /// The principal ideal `(s)`.
    pub fn principal(&self, s: Element) -> Ideal {
        self.generate_ideal(ElementSet::singleton(s))
    }

    /// `I + J = {x + y : x ∈ I, y ∈ J}`.
    pub fn add_ideals(&self, i: &Ideal, j: &Ideal) -> Result<Ideal> {
        self.own2(i, j)?;
        let mut sum = ElementSet::EMPTY;
        for x in i.members {
            for y in j.members {
                sum.insert(self.add(x, y));
            }
        }
        Ok(self.wrap(sum))
    }

    /// `IJ`: finite sums of products `xy` with `x ∈ I`, `y ∈ J`.
    pub fn mul_ideals(&self, i: &Ideal, j: &Ideal) -> Result<Ideal> {
        self.own2(i, j)?;
        let mut products = ElementSet::EMPTY;
        for x in i.members {
            for y in j.members {
                products.insert(self.mul(x, y));
            }
        }
        Ok(self.wrap(self.additive_closure(products)))
    }

    pub fn intersect_ideals(&self, i: &Ideal, j: &Ideal) -> Result<Ideal> {
        self.own2(i, j)?;
        Ok(self.wrap(i.members.intersection(j.members)))
    }

    /// `Σ Iₖ`; the empty sum is `(0)`.
    pub fn sum_of<'a>(&self, ideals: impl IntoIterator<Item = &'a Ideal>) -> Result<Ideal> {
        ideals
            .into_iter()
            .try_fold(self.zero_ideal(), |acc, i| self.add_ideals(&acc, i))
    }

    /// `Π Iₖ`; the empty product is `S`.
    pub fn product_of<'a>(&self, ideals: impl IntoIterator<Item = &'a Ideal>) -> Result<Ideal> {
        ideals
            .into_iter()
            .try_fold(self.unit_ideal(), |acc, i| self.mul_ideals(&acc, i))
    }

    /// `∩ Iₖ`; the empty intersection is `S`.
    pub fn intersection_of<'a>(
        &self,
        ideals: impl IntoIterator<Item = &'a Ideal>,
    ) -> Result<Ideal> {
        ideals
            .into_iter()
            .try_fold(self.unit_ideal(), |acc, i| self.intersect_ideals(&acc, i))
    }

    /// `Iⁿ` for `n ≥ 1`.
    pub fn ideal_power(&self, i: &Ideal, n: u32) -> Result<Ideal> {
        self.own(i)?;
        let mut acc = *i;
        for _ in 1..n {
            acc = self.mul_ideals(&acc, i)?;
        }
        Ok(acc)
    }

    /// `[I : J] = {s ∈ S : sJ ⊆ I}`.
    pub fn colon(&self, i: &Ideal, j: &Ideal) -> Result<Ideal> {
        self.own2(i, j)?;
        let members = self
            .elements()
            .filter(|&s| j.members.iter().all(|y| i.contains(self.mul(s, y))))
            .collect();
        Ok(self.wrap(members))
    }

    /// `[I : x] = {s : sx ∈ I}`, realized as `[I : (x)]`.
    pub fn colon_element(&self, i: &Ideal, x: Element) -> Result<Ideal> {
        self.colon(i, &self.principal(x))
    }

    /// `√I = {s : sⁿ ∈ I for some n ≥ 1}`, scanning `n ≤ |S|`.
    pub fn radical(&self, i: &Ideal) -> Result<Ideal> {
        self.own(i)?;
        let members = self
            .elements()
            .filter(|&s| !self.powers(s).is_disjoint(i.members))
            .collect();
        Ok(self.wrap(members))
    }

    /// A pair `(a, b)` with `a ∈ I`, `a + b ∈ I` and `b ∉ I`, if any.
    pub fn subtractive_witness(&self, i: &Ideal) -> Result<Option<(Element, Element)>> {
        self.own(i)?;
        for a in i.members {
            for b in self.elements() {
                if i.contains(self.add(a, b)) && !i.contains(b) {
                    return Ok(Some((a, b)));
                }
            }
        }
        Ok(None)
    }

    pub fn is_subtractive(&self, i: &Ideal) -> Result<bool> {
        Ok(self.subtractive_witness(i)?.is_none())
    }

    /// Every ideal of the semiring is subtractive.
    pub fn is_subtractive_semiring(&self) -> bool {
        self.ideals()
            .iter()
            .all(|i| self.subtractive_witness(i).is_ok_and(|w| w.is_none()))
    }

    /// A pair of distinct ideals `J ≠ K` with `IJ = IK`, if one exists.
    pub fn cancellation_witness(&self, i: &Ideal) -> Result<Option<(Ideal, Ideal)>> {
        self.own(i)?;
        if i.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let lattice = self.ideals();
        let products: Vec<Ideal> = lattice
            .iter()
            .map(|j| self.mul_ideals(i, j))
            .collect::<Result<_>>()?;
        for (a, pa) in products.iter().enumerate() {
            for (b, pb) in products.iter().enumerate().skip(a + 1) {
                if pa == pb {
                    return Ok(Some((lattice.ideals()[a], lattice.ideals()[b])));
                }
            }
        }
        Ok(None)
    }

    /// `I` is a cancellation ideal: `IJ = IK` implies `J = K`.
    pub fn is_cancellation(&self, i: &Ideal) -> Result<bool> {
        Ok(self.cancellation_witness(i)?.is_none())
    }

    /// `[IJ : I] = J` for every ideal `J`.
    pub fn is_cancellation_by_colon(&self, i: &Ideal) -> Result<bool> {
        self.own(i)?;
        if i.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        for j in self.ideals() {
            let ij = self.mul_ideals(i, j)?;
            if self.colon(&ij, i)? != *j {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `IJ ⊆ IK` implies `J ⊆ K` for all ideals `J, K`.
    pub fn is_cancellation_by_inclusion(&self, i: &Ideal) -> Result<bool> {
        self.own(i)?;
        if i.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let lattice = self.ideals();
        let products: Vec<Ideal> = lattice
            .iter()
            .map(|j| self.mul_ideals(i, j))
            .collect::<Result<_>>()?;
        for (a, j) in lattice.iter().enumerate() {
            for (b, k) in lattice.iter().enumerate() {
                if products[a].is_subset(&products[b]) && !j.is_subset(k) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The cached ideal lattice `Id(S)`.
    ///
    /// Computed on first use by closing `{(0)}` under joins with principal
    /// ideals; every ideal is the sum of its principal sub-ideals, so the
    /// closure reaches all of them.
    pub fn ideals(&self) -> &IdealLattice {
        self.ideal_cache.get_or_init(|| IdealLattice {
            parent: self.id(),
            ideals: self
                .principal_join_closure()
                .into_iter()
                .map(|m| self.wrap(m))
                .collect(),
        })
    }

    fn principal_join_closure(&self) -> Vec<ElementSet> {
        let principals: Vec<ElementSet> = self
            .elements()
            .map(|s| self.principal(s).members)
            .collect();
        let zero = ElementSet::singleton(ZERO);
        let mut found = std::collections::BTreeSet::from([zero]);
        let mut frontier = vec![zero];
        while let Some(current) = frontier.pop() {
            for &p in &principals {
                let joined = self.add_sets(current, p);
                if found.insert(joined) {
                    frontier.push(joined);
                }
            }
        }
        found.into_iter().collect()
    }

    fn add_sets(&self, a: ElementSet, b: ElementSet) -> ElementSet {
        let mut sum = ElementSet::EMPTY;
        for x in a {
            for y in b {
                sum.insert(self.add(x, y));
            }
        }
        sum
    }

    /// Ideals containing `i`, in canonical order.
    pub fn ideals_containing(&self, i: &Ideal) -> Result<Vec<Ideal>> {
        self.own(i)?;
        Ok(self.ideals().iter().filter(|j| i.is_subset(j)).copied().collect())
    }

    /// Render an ideal with element names.
    pub fn format_ideal(&self, i: &Ideal) -> String {
        self.format_set(i.members)
    }
}

/// `Id(S)` subject to a size cap on `S`.
pub fn enumerate_ideals(s: &FiniteSemiring, size_cap: usize) -> Result<IdealLattice> {
    if s.size() > size_cap {
        return Err(Error::SizeCapExceeded {
            size: s.size(),
            cap: size_cap,
        });
    }
    Ok(s.ideals().clone())
}

/// `(Id(S), +, ·)` as a finite semiring with zero `(0)` and one `S`.
///
/// Element `k` of the result corresponds to the `k`-th ideal in canonical
/// order, except that `(0)` and `S` are moved to indices 0 and 1.
pub fn ideal_semiring(s: &FiniteSemiring, size_cap: usize) -> Result<(FiniteSemiring, Vec<Ideal>)> {
    let lattice = enumerate_ideals(s, size_cap)?;
    let mut order: Vec<Ideal> = vec![s.zero_ideal(), s.unit_ideal()];
    order.extend(
        lattice
            .iter()
            .filter(|i| !i.is_zero() && i.is_proper())
            .copied(),
    );
    let position = |i: &Ideal| order.iter().position(|j| j == i).expect("closed");
    let n = order.len();
    let mut add = vec![0; n * n];
    let mut mul = vec![0; n * n];
    for (a, i) in order.iter().enumerate() {
        for (b, j) in order.iter().enumerate() {
            add[a * n + b] = position(&s.add_ideals(i, j)?);
            mul[a * n + b] = position(&s.mul_ideals(i, j)?);
        }
    }
    let names = order.iter().map(|i| s.format_ideal(i)).collect();
    let raw = crate::semiring::RawSemiring {
        name: Some(format!("Id({})", s.name())),
        size: n,
        elements: Some(names),
        add: add.chunks(n).map(<[_]>::to_vec).collect(),
        mul: mul.chunks(n).map(<[_]>::to_vec).collect(),
        zero: 0,
        one: 1,
    };
    let result = crate::semiring::validate_semiring(&raw)?;
    Ok((result, order))
}
