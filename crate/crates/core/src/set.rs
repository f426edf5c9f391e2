//! Fixed-width bitsets over element indices.

use std::fmt;

/// Largest carrier supported by [`ElementSet`].
pub const MAX_ELEMENTS: usize = 64;

/// A subset of `{0, …, n-1}` for `n ≤ 64`, stored as a bitmask.
///
/// Equal sets have equal bits, so the derived `Ord` is the canonical
/// subset order used throughout the crate (ascending by encoding).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{0, …, n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        ElementSet(1u64 << e)
    }

    pub fn contains(self, e: usize) -> bool {
        e < MAX_ELEMENTS && self.0 & (1u64 << e) != 0
    }

    pub fn insert(&mut self, e: usize) -> bool {
        let had = self.contains(e);
        self.0 |= 1u64 << e;
        !had
    }

    pub fn with(self, e: usize) -> Self {
        ElementSet(self.0 | (1u64 << e))
    }

    pub fn remove(&mut self, e: usize) {
        self.0 &= !(1u64 << e);
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    /// Complement relative to `{0, …, n-1}`.
    pub fn complement(self, n: usize) -> Self {
        ElementSet::full(n).difference(self)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }
}

/// Ascending iterator over the members of an [`ElementSet`].
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut set = ElementSet::EMPTY;
        for e in iter {
            set.insert(e);
        }
        set
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iteration_is_ascending() {
        let s: ElementSet = [5, 0, 3].into_iter().collect();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 3, 5]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.min(), Some(0));
    }

    #[test]
    fn full_and_complement() {
        assert_eq!(ElementSet::full(3).bits(), 0b111);
        assert_eq!(ElementSet::full(64).len(), 64);
        let s = ElementSet::singleton(1);
        assert_eq!(s.complement(3).iter().collect::<Vec<_>>(), vec![0, 2]);
    }

    #[test]
    fn subset_relations() {
        let a: ElementSet = [0, 1].into_iter().collect();
        let b: ElementSet = [0, 1, 2].into_iter().collect();
        assert!(a.is_subset(b));
        assert!(!b.is_subset(a));
        assert!(a.difference(b).is_empty());
        assert!(ElementSet::singleton(2).is_disjoint(a));
    }
}
