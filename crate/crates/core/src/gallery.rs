//! Built-in corpus of small semirings.

use crate::error::{Error, Result};
use crate::semiring::{direct_product, FiniteSemiring};

/// The Boolean semiring `{0, 1}` with `max` and `min`.
pub fn boolean() -> FiniteSemiring {
    chain(2)
}

/// The chain lattice with `n` elements under `max` and `min`.
///
/// `L3` is named `{0, s, 1}`; longer chains use `a, b, c, …` for the
/// intermediate elements.
pub fn chain(n: usize) -> FiniteSemiring {
    assert!(n >= 2);
    // index 0 is the bottom, index 1 the top, index k ≥ 2 sits at level k-1
    let level = |i: usize| match i {
        0 => 0,
        1 => n - 1,
        k => k - 1,
    };
    let index = |l: usize| match l {
        0 => 0,
        l if l == n - 1 => 1,
        l => l + 1,
    };
    let mut names = vec!["0".to_string(), "1".to_string()];
    if n == 3 {
        names.push("s".into());
    } else {
        names.extend((0..n - 2).map(|k| ((b'a' + k as u8) as char).to_string()));
    }
    let name = if n == 2 { "B".to_string() } else { format!("L{n}") };
    FiniteSemiring::from_fn(
        &name,
        names,
        |a, b| index(level(a).max(level(b))),
        |a, b| index(level(a).min(level(b))),
    )
    .expect("chain lattices are semirings")
}

/// Naturals `{0, …, k}` with addition and multiplication saturating at `k`.
pub fn saturating(k: usize) -> FiniteSemiring {
    assert!(k >= 1);
    FiniteSemiring::from_fn(
        &format!("N{k}"),
        (0..=k).map(|i| i.to_string()).collect(),
        |a, b| (a + b).min(k),
        |a, b| (a * b).min(k),
    )
    .expect("saturating naturals form a semiring")
}

/// The ring of integers modulo `n`.
pub fn integers_mod(n: usize) -> FiniteSemiring {
    assert!(n >= 2);
    FiniteSemiring::from_fn(
        &format!("Z{n}"),
        (0..n).map(|i| i.to_string()).collect(),
        |a, b| (a + b) % n,
        |a, b| (a * b) % n,
    )
    .expect("residue rings are semirings")
}

/// `{-inf, 0, …, k}` with `max` as addition and `+` truncated at `k` as
/// multiplication.
pub fn truncated_max_plus(k: usize) -> FiniteSemiring {
    // index 0 is -inf, index i ≥ 1 holds the value i-1
    let value = |i: usize| if i == 0 { None } else { Some(i - 1) };
    let index = |v: Option<usize>| v.map_or(0, |v| v + 1);
    let mut names = vec!["-inf".to_string()];
    names.extend((0..=k).map(|v| v.to_string()));
    FiniteSemiring::from_fn(
        &format!("T{k}"),
        names,
        |a, b| index(value(a).max(value(b))),
        |a, b| index(value(a).zip(value(b)).map(|(x, y)| (x + y).min(k))),
    )
    .expect("truncated max-plus is a semiring")
}

fn product(a: &FiniteSemiring, b: &FiniteSemiring) -> FiniteSemiring {
    direct_product(a, b).expect("products of gallery semirings are semirings")
}

/// All built-in semirings, in a fixed order.
pub fn gallery() -> Vec<FiniteSemiring> {
    let b = boolean();
    let l3 = chain(3);
    let n2 = saturating(2);
    vec![
        b.clone(),
        l3.clone(),
        chain(4),
        chain(5),
        chain(6),
        n2.clone(),
        saturating(3),
        saturating(4),
        product(&b, &b),
        product(&b, &l3),
        product(&l3, &l3),
        product(&n2, &b),
        integers_mod(2),
        integers_mod(4),
        integers_mod(6),
        truncated_max_plus(2),
    ]
}

/// Look up a gallery member by name (`B`, `L3`, `BxB`, …).
pub fn by_name(name: &str) -> Result<FiniteSemiring> {
    gallery()
        .into_iter()
        .find(|s| s.name() == name)
        .ok_or_else(|| Error::UnknownGallery(name.to_string()))
}

pub fn names() -> Vec<String> {
    gallery().iter().map(|s| s.name().to_string()).collect()
}
