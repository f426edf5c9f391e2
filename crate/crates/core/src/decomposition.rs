//! Irreducible and primary decompositions, minimization and minimal
//! primes.

use crate::error::{Error, Result};
use crate::ideals::Ideal;
use crate::semiring::{Element, FiniteSemiring};
use crate::spectrum::{maximal_elements, minimal_elements};

/// Largest family of primary ideals tried when repairing a decomposition.
pub const REPAIR_FAMILY_LIMIT: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecompositionKind {
    Irreducible,
    Primary,
}

/// `target = ∩ components`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub target: Ideal,
    pub components: Vec<Ideal>,
    pub kind: DecompositionKind,
    pub minimal: bool,
    /// Set when some irreducible component was not primary and had to be
    /// replaced by a lattice search.
    pub repaired: bool,
}

impl FiniteSemiring {
    /// A ⊆-maximal ideal containing `i` and avoiding `s`; the least such
    /// ideal in canonical order is returned and checked to be irreducible.
    pub fn irreducible_separating(&self, i: &Ideal, s: Element) -> Result<Ideal> {
        self.own(i)?;
        if s >= self.size() || i.contains(s) {
            return Err(Error::PreconditionViolated(format!(
                "{} must lie outside {}",
                s,
                self.format_ideal(i)
            )));
        }
        let candidates: Vec<Ideal> = self
            .ideals()
            .iter()
            .filter(|j| i.is_subset(j) && !j.contains(s))
            .copied()
            .collect();
        let best = *maximal_elements(&candidates)
            .first()
            .expect("the ideal itself is a candidate");
        if !self.is_irreducible(&best)? {
            return Err(Error::PostconditionFailed(format!(
                "{} is maximal avoiding {} but reducible",
                self.format_ideal(&best),
                self.element_name(s)
            )));
        }
        Ok(best)
    }

    /// Split `i` recursively along the least reducing pair until every piece
    /// is irreducible. The result is checked against the intersection of all
    /// irreducible ideals containing `i`.
    pub fn irreducible_decomposition(&self, i: &Ideal) -> Result<Decomposition> {
        self.own(i)?;
        if !i.is_proper() {
            return Err(Error::ImproperIdeal);
        }
        let mut components = Vec::new();
        let mut pending = vec![*i];
        while let Some(current) = pending.pop() {
            match self.reducing_pair(&current)? {
                Some((j, k)) => {
                    pending.push(k);
                    pending.push(j);
                }
                None => components.push(current),
            }
        }
        components.sort();
        components.dedup();
        if self.intersection_of(&components)? != *i {
            return Err(Error::PostconditionFailed(
                "irreducible components do not intersect to the ideal".into(),
            ));
        }
        let all_irreducible: Vec<Ideal> = self
            .ideals_containing(i)?
            .into_iter()
            .filter(|j| self.is_irreducible(j).unwrap_or(false))
            .collect();
        if self.intersection_of(&all_irreducible)? != *i {
            return Err(Error::PostconditionFailed(
                "the ideal differs from the intersection of the irreducibles above it".into(),
            ));
        }
        Ok(Decomposition {
            target: *i,
            components,
            kind: DecompositionKind::Irreducible,
            minimal: false,
            repaired: false,
        })
    }

    /// Irreducible decomposition followed by a primary check of each
    /// component. Non-primary components are replaced, when possible, by a
    /// family of at most [`REPAIR_FAMILY_LIMIT`] primary ideals containing
    /// them with the same intersection.
    pub fn primary_decomposition(&self, i: &Ideal) -> Result<Decomposition> {
        let irreducible = self.irreducible_decomposition(i)?;
        let mut components = Vec::new();
        let mut repaired = false;
        for c in &irreducible.components {
            if self.is_primary(c)? {
                components.push(*c);
                continue;
            }
            repaired = true;
            match self.primary_family_for(c)? {
                Some(family) => components.extend(family),
                None => {
                    // component-wise repair failed; try the ideal as a whole
                    return match self.primary_family_for(i)? {
                        Some(family) => Ok(Decomposition {
                            target: *i,
                            components: family,
                            kind: DecompositionKind::Primary,
                            minimal: false,
                            repaired: true,
                        }),
                        None => Err(Error::NoPrimaryDecomposition {
                            witness: c.members(),
                        }),
                    };
                }
            }
        }
        components.sort();
        components.dedup();
        Ok(Decomposition {
            target: *i,
            components,
            kind: DecompositionKind::Primary,
            minimal: false,
            repaired,
        })
    }

    /// A set of at most [`REPAIR_FAMILY_LIMIT`] primary ideals containing
    /// `i` whose intersection is `i`.
    fn primary_family_for(&self, i: &Ideal) -> Result<Option<Vec<Ideal>>> {
        let primaries: Vec<Ideal> = self
            .ideals_containing(i)?
            .into_iter()
            .filter(|q| self.is_primary(q).unwrap_or(false))
            .collect();
        let mut chosen = Vec::new();
        Ok(self.search_family(i, &primaries, 0, &mut chosen))
    }

    fn search_family(
        &self,
        target: &Ideal,
        pool: &[Ideal],
        start: usize,
        chosen: &mut Vec<Ideal>,
    ) -> Option<Vec<Ideal>> {
        if !chosen.is_empty() {
            let meet = chosen
                .iter()
                .fold(self.all(), |acc, q| acc.intersection(q.members()));
            if meet == target.members() {
                return Some(chosen.clone());
            }
        }
        if chosen.len() == REPAIR_FAMILY_LIMIT {
            return None;
        }
        for k in start..pool.len() {
            chosen.push(pool[k]);
            if let Some(found) = self.search_family(target, pool, k + 1, chosen) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }

    /// Merge components sharing a radical, then drop components containing
    /// the intersection of the others.
    pub fn minimize(&self, d: &Decomposition) -> Result<Decomposition> {
        if d.kind != DecompositionKind::Primary {
            return Err(Error::PreconditionViolated(
                "only primary decompositions can be minimized".into(),
            ));
        }
        let mut groups: Vec<(Ideal, Ideal)> = Vec::new();
        for q in &d.components {
            let p = self.radical(q)?;
            match groups.iter_mut().find(|(r, _)| *r == p) {
                Some((_, merged)) => *merged = self.intersect_ideals(merged, q)?,
                None => groups.push((p, *q)),
            }
        }
        let mut components: Vec<Ideal> = groups.into_iter().map(|(_, q)| q).collect();
        components.sort();
        loop {
            let redundant = (0..components.len()).find(|&k| {
                let others = components
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != k)
                    .fold(self.all(), |acc, (_, q)| acc.intersection(q.members()));
                others.is_subset(components[k].members())
            });
            match redundant {
                Some(k) if components.len() > 1 => {
                    components.remove(k);
                }
                _ => break,
            }
        }
        let out = Decomposition {
            target: d.target,
            components,
            kind: DecompositionKind::Primary,
            minimal: true,
            repaired: d.repaired,
        };
        self.check_decomposition(&out)?;
        Ok(out)
    }

    /// Verify every invariant a decomposition claims.
    pub fn check_decomposition(&self, d: &Decomposition) -> Result<()> {
        if self.intersection_of(&d.components)? != d.target {
            return Err(Error::PostconditionFailed(
                "components do not intersect to the target".into(),
            ));
        }
        for c in &d.components {
            let ok = match d.kind {
                DecompositionKind::Irreducible => self.is_irreducible(c)?,
                DecompositionKind::Primary => self.is_primary(c)?,
            };
            if !ok {
                return Err(Error::PostconditionFailed(format!(
                    "component {} has the wrong kind",
                    self.format_ideal(c)
                )));
            }
        }
        if d.minimal {
            let radicals: Vec<Ideal> = d
                .components
                .iter()
                .map(|q| self.radical(q))
                .collect::<Result<_>>()?;
            for (a, p) in radicals.iter().enumerate() {
                if radicals[a + 1..].contains(p) {
                    return Err(Error::PostconditionFailed(
                        "radicals of a minimal decomposition repeat".into(),
                    ));
                }
            }
            for (k, q) in d.components.iter().enumerate() {
                let others = d
                    .components
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != k)
                    .fold(self.all(), |acc, (_, c)| acc.intersection(c.members()));
                if d.components.len() > 1 && others.is_subset(q.members()) {
                    return Err(Error::PostconditionFailed(format!(
                        "component {} is redundant",
                        self.format_ideal(q)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Radicals of the components of a decomposition ("primes belonging to
    /// the ideal" when the decomposition is minimal), in canonical order.
    pub fn associated_primes(&self, d: &Decomposition) -> Result<Vec<Ideal>> {
        let mut primes: Vec<Ideal> = d
            .components
            .iter()
            .map(|q| self.radical(q))
            .collect::<Result<_>>()?;
        primes.sort();
        primes.dedup();
        Ok(primes)
    }

    /// Minimal primes belonging to `i`, read off a minimal primary
    /// decomposition and checked against the minimal elements of `V(I)`.
    pub fn minimal_primes(&self, i: &Ideal) -> Result<Vec<Ideal>> {
        let d = self.minimize(&self.primary_decomposition(i)?)?;
        let from_decomposition = minimal_elements(&self.associated_primes(&d)?);
        let from_spectrum = minimal_elements(&self.v_of(i)?);
        if from_decomposition != from_spectrum {
            return Err(Error::PostconditionFailed(
                "minimal primes differ from the minimal elements of V(I)".into(),
            ));
        }
        Ok(from_decomposition)
    }
}
