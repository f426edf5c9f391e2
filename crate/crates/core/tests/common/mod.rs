//! Brute-force oracles that read only the Cayley tables.
#![allow(dead_code)]

use semiring_ideals::{ElementSet, FiniteSemiring};

pub fn set(items: &[usize]) -> ElementSet {
    items.iter().copied().collect()
}

pub fn el(s: &FiniteSemiring, name: &str) -> usize {
    s.element_by_name(name).unwrap()
}

pub fn named(s: &FiniteSemiring, names: &[&str]) -> ElementSet {
    names.iter().map(|n| el(s, n)).collect()
}

pub fn is_ideal(s: &FiniteSemiring, i: ElementSet) -> bool {
    let n = s.size();
    !i.is_empty()
        && i.iter().all(|a| i.iter().all(|b| i.contains(s.add(a, b))))
        && i.iter().all(|a| (0..n).all(|r| i.contains(s.mul(r, a))))
}

/// Every subset of S tested against the ideal axioms.
pub fn ideals_by_scan(s: &FiniteSemiring) -> Vec<ElementSet> {
    (0..1u64 << s.size())
        .map(ElementSet::from_bits)
        .filter(|&i| is_ideal(s, i))
        .collect()
}

/// `(A)` as the intersection of all ideals containing `A`.
pub fn generated(s: &FiniteSemiring, a: ElementSet) -> ElementSet {
    ideals_by_scan(s)
        .into_iter()
        .filter(|i| a.is_subset(*i))
        .fold(s.all(), |acc, i| acc.intersection(i))
}

pub fn sum(s: &FiniteSemiring, i: ElementSet, j: ElementSet) -> ElementSet {
    let mut out = ElementSet::EMPTY;
    for a in i {
        for b in j {
            out.insert(s.add(a, b));
        }
    }
    out
}

/// Finite sums of products, i.e. the smallest ideal containing all `ab`.
pub fn product(s: &FiniteSemiring, i: ElementSet, j: ElementSet) -> ElementSet {
    let mut gens = ElementSet::EMPTY;
    for a in i {
        for b in j {
            gens.insert(s.mul(a, b));
        }
    }
    generated(s, gens)
}

pub fn colon(s: &FiniteSemiring, i: ElementSet, j: ElementSet) -> ElementSet {
    (0..s.size())
        .filter(|&x| j.iter().all(|y| i.contains(s.mul(x, y))))
        .collect()
}

pub fn is_prime(s: &FiniteSemiring, p: ElementSet) -> bool {
    let n = s.size();
    p != s.all()
        && (0..n).all(|a| (0..n).all(|b| !p.contains(s.mul(a, b)) || p.contains(a) || p.contains(b)))
}

pub fn primes(s: &FiniteSemiring) -> Vec<ElementSet> {
    ideals_by_scan(s).into_iter().filter(|&p| is_prime(s, p)).collect()
}

pub fn maximals(s: &FiniteSemiring) -> Vec<ElementSet> {
    let proper: Vec<ElementSet> = ideals_by_scan(s).into_iter().filter(|&i| i != s.all()).collect();
    proper
        .iter()
        .filter(|m| !proper.iter().any(|j| m.is_subset(*j) && j != *m))
        .copied()
        .collect()
}

pub fn radical(s: &FiniteSemiring, i: ElementSet) -> ElementSet {
    (0..s.size())
        .filter(|&x| {
            let mut p = x;
            for _ in 0..s.size() {
                if i.contains(p) {
                    return true;
                }
                p = s.mul(p, x);
            }
            false
        })
        .collect()
}

pub fn is_primary(s: &FiniteSemiring, q: ElementSet) -> bool {
    let n = s.size();
    let r = radical(s, q);
    q != s.all()
        && (0..n).all(|x| (0..n).all(|y| !q.contains(s.mul(x, y)) || q.contains(x) || r.contains(y)))
}

pub fn is_irreducible(s: &FiniteSemiring, i: ElementSet) -> bool {
    let all = ideals_by_scan(s);
    !all.iter().any(|&j| {
        all.iter()
            .any(|&k| j != i && k != i && j.intersection(k) == i)
    })
}

/// Classes of `S × U` under `(x,u) ~ (y,v) ⇔ ∃t ∈ U: tvx = tuy`, checked
/// to be a partition.
pub fn fraction_classes(s: &FiniteSemiring, u: ElementSet) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..s.size())
        .flat_map(|x| u.iter().map(move |d| (x, d)))
        .collect();
    let related = |(x, a): (usize, usize), (y, b): (usize, usize)| {
        u.iter().any(|t| s.mul(s.mul(t, b), x) == s.mul(s.mul(t, a), y))
    };
    let mut classes: Vec<Vec<(usize, usize)>> = Vec::new();
    for &p in &pairs {
        match classes.iter_mut().find(|c| related(c[0], p)) {
            Some(c) => c.push(p),
            None => classes.push(vec![p]),
        }
    }
    for c in &classes {
        for &a in c {
            for &b in c {
                assert!(related(a, b), "~ is not transitive");
            }
        }
    }
    classes
}
