//! Exhaustive verification of the theory on one semiring.
//!
//! Each proposition is identified by a stable id and carries the statement
//! it checks. A run counts the instances examined and collects a witness
//! for every failure. Checks recompute what they can from the tables
//! directly instead of trusting the library operations under test.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

use crate::decomposition::{Decomposition, DecompositionKind};
use crate::error::{Error, Result};
use crate::gallery;
use crate::ideals::{ideal_semiring, Ideal};
use crate::localization::{localize, localize_at_prime, LocalizationResult};
use crate::morphisms::{enumerate_homs, validate_hom, SemiringHom};
use crate::semimodules::{is_zero_locally, localize_module_with, FiniteSemimodule};
use crate::semiring::{direct_product, FiniteSemiring, ONE, ZERO};
use crate::set::{ElementSet, MAX_ELEMENTS};
use crate::spectrum::McSet;

/// Largest MC-sets used for semiring localization checks.
pub const MC_SET_LIMIT: usize = 4;
/// Largest MC-sets used for semimodule localization checks.
pub const MODULE_MC_SET_LIMIT: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropositionReport {
    pub id: String,
    pub anchor: String,
    pub instances: u64,
    pub failures: Vec<String>,
}

/// A search for an example whose existence is claimed but not guaranteed
/// on every semiring. Findings are informational.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub id: String,
    pub description: String,
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub semiring: String,
    pub propositions: Vec<PropositionReport>,
    #[serde(default)]
    pub diagnostics: Vec<Diagnostic>,
    pub elapsed_ms: u64,
}

impl CheckReport {
    pub fn failure_count(&self) -> usize {
        self.propositions.iter().map(|p| p.failures.len()).sum()
    }

    pub fn passed(&self) -> bool {
        self.failure_count() == 0
    }

    pub fn proposition(&self, id: &str) -> Option<&PropositionReport> {
        self.propositions.iter().find(|p| p.id == id)
    }

    pub fn diagnostic(&self, id: &str) -> Option<&Diagnostic> {
        self.diagnostics.iter().find(|d| d.id == id)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selection {
    All,
    Ids(Vec<String>),
}

impl Selection {
    /// `"all"` or a comma-separated list of ids.
    pub fn parse(text: &str) -> Selection {
        if text.trim() == "all" {
            Selection::All
        } else {
            Selection::Ids(
                text.split(',')
                    .map(|x| x.trim().to_string())
                    .filter(|x| !x.is_empty())
                    .collect(),
            )
        }
    }
}

#[derive(Default)]
struct Tally {
    instances: u64,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures.push(witness());
        }
    }
}

type CheckFn = fn(&Context, &mut Tally) -> Result<()>;

struct Proposition {
    id: &'static str,
    anchor: &'static str,
    run: CheckFn,
}

macro_rules! propositions {
    ($($id:literal, $anchor:literal => $run:ident;)*) => {
        const PROPOSITIONS: &[Proposition] = &[
            $(Proposition { id: $id, anchor: $anchor, run: $run },)*
        ];
    };
}

propositions! {
    "semiring-axioms", "(S,+,0) and (S,·,1) commutative monoids, a(b+c) = ab+ac, a·0 = 0" => semiring_axioms;
    "pow-additive", "s^(m+n) = s^m · s^n" => pow_additive;
    "units-group", "U(S) is an abelian multiplicative group" => units_group;
    "ideal-arith", "I+J and IJ are ideals; associativity, commutativity, distributivity; IJ ⊆ I∩J; (I+J)(I∩J) ⊆ IJ" => ideal_arith;
    "ideal-lattice", "(Id(S),⊆) is a bounded lattice with sup I+J and inf I∩J" => ideal_lattice;
    "ideal-semiring", "(Id(S),+,·) is an additively idempotent semiring" => ideal_semiring_check;
    "colon-laws", "I ⊆ [I:J]; [I:J]J ⊆ I; [[I:J]:K] = [I:JK]; [∩I:J] = ∩[I:J]; [I:ΣJ] = ∩[I:J]; [I:J] = [I:I+J]" => colon_laws;
    "radical-laws", "I ⊆ √I = √√I; √(IJ) = √(I∩J) = √I∩√J; √I = S iff I = S; √(I+J) = √(√I+√J)" => radical_laws;
    "cancellation", "I cancellation iff [IJ:I] = J for all J iff IJ ⊆ IK implies J ⊆ K; [IJ:I]I = IJ" => cancellation;
    "cancelable-principal", "s multiplicatively cancelable implies (s) is a cancellation ideal" => cancelable_principal;
    "infinite-distributivity", "J·ΣI_α = ΣJ·I_α" => infinite_distributivity;
    "enumeration-oracle", "principal-join closure finds exactly the ideals of a subset scan" => enumeration_oracle;
    "prime-ideal-pairs", "P prime iff IJ ⊆ P implies I ⊆ P or J ⊆ P" => prime_ideal_pairs;
    "prime-complement-mcset", "P prime iff S−P is an MC-set" => prime_complement_mcset;
    "prime-containing-ideals", "P ⊇ some I_k iff P ⊇ ∩I_k iff P ⊇ ΠI_k" => prime_containing_ideals;
    "maxisprime", "ideals maximal among those disjoint from an MC-set W are prime" => maxisprime;
    "max-is-prime", "Max(S) is nonempty and maximal ideals are prime" => max_is_prime;
    "proper-in-maximal", "every proper ideal lies in a maximal ideal" => proper_in_maximal;
    "zariski", "V(I)∪V(J) = V(I∩J); ∩V(I_α) = V(ΣI_α); V(0) = Spec(S); V(S) = ∅; V(I) ≠ ∅ iff I proper" => zariski;
    "krull-radical", "√I = ∩{P ∈ Spec(S) : P ⊇ I}" => krull_radical;
    "units-maximal", "U(S) = S − ∪Max(S)" => units_maximal;
    "local-criterion", "S local iff S−U(S) is an ideal; S semifield iff (0) maximal" => local_criterion;
    "comaximal", "comaximal I,J give I∩J = IJ; pairwise comaximal families give ∩ = Π; distinct maximals are comaximal; I,J comaximal iff √I,√J comaximal" => comaximal;
    "semilocal", "Max(S) is finite and m₁ ⊋ m₁m₂ ⊋ … for distinct maximals" => semilocal;
    "primary-radical-prime", "√Q of a primary Q is the smallest prime containing Q" => primary_radical_prime;
    "primary-maximal-radical", "√Q maximal implies Q primary; powers of a maximal ideal are primary" => primary_maximal_radical;
    "primary-intersection", "a finite intersection of P-primary ideals is P-primary" => primary_intersection;
    "primary-colon", "Q P-primary: x ∈ Q gives [Q:x] = S; x ∉ Q gives [Q:x] P-primary; x ∉ P gives [Q:x] = Q" => primary_colon;
    "hom-contraction", "(J₁+J₂)ᶜ ⊇ J₁ᶜ+J₂ᶜ; (J₁∩J₂)ᶜ = J₁ᶜ∩J₂ᶜ; (J₁J₂)ᶜ ⊇ J₁ᶜJ₂ᶜ; (√J)ᶜ = √Jᶜ; Qᶜ prime" => hom_contraction;
    "hom-extension", "(I₁+I₂)ᵉ = I₁ᵉ+I₂ᵉ; (I₁∩I₂)ᵉ ⊆ I₁ᵉ∩I₂ᵉ; (I₁I₂)ᵉ = I₁ᵉI₂ᵉ; (√I)ᵉ ⊆ √Iᵉ" => hom_extension;
    "hom-ec-ce", "I ⊆ Iᵉᶜ; J ⊇ Jᶜᵉ; Iᵉ = Iᵉᶜᵉ; Jᶜ = Jᶜᵉᶜ" => hom_ec_ce;
    "fraction-equivalence", "(x,u) ~ (y,v) iff tvx = tuy for some t ∈ U is an equivalence with well-defined fraction arithmetic" => fraction_equivalence;
    "localized-ideals", "I_U = I·S_U; I ⊆ I′ gives I_U ⊆ I′_U; (I+I′)_U = I_U+I′_U; (I∩I′)_U = I_U∩I′_U" => localized_ideals;
    "extended-ideals", "every ideal of S_U is an extended ideal" => extended_ideals;
    "prime-correspondence", "primes of S_U correspond to primes of S disjoint from U" => prime_correspondence;
    "local-at-prime", "S_P is local with maximal ideal PS_P; its primes correspond to primes contained in P" => local_at_prime;
    "gamma-kernel", "γ(m) = 0 implies tm = 0 for some t ∈ U" => gamma_kernel;
    "semimodule-localization", "K ⊆ L gives K_U ⊆ L_U; (K+L)_U = K_U+L_U; (K∩L)_U = K_U∩L_U; (IL)_U = I_U L_U" => semimodule_localization;
    "annihilator-ideal", "Ann(x) = {s : s·x = 0} is an ideal" => annihilator_ideal;
    "local-global-zero", "M = 0 iff M_p = 0 for all primes p iff M_m = 0 for all maximal m" => local_global_zero;
    "irreducible-separating", "for s ∉ I there is an irreducible J ⊇ I with s ∉ J" => irreducible_separating;
    "irreducible-decomposition", "every proper ideal is a finite intersection of irreducibles and the intersection of all irreducibles containing it" => irreducible_decomposition;
    "subtractive-irreducible-primary", "a subtractive irreducible ideal is primary" => subtractive_irreducible_primary;
    "primary-decomposition", "in a subtractive semiring every ideal is a finite intersection of primary ideals" => primary_decomposition;
    "minimal-decomposition", "minimizing keeps the intersection, makes radicals distinct and drops redundant components" => minimal_decomposition;
    "minimal-primes", "minimal primes belonging to I are the minimal primes containing I; every prime containing I contains one" => minimal_primes;
}

/// Every proposition id in report order.
pub fn proposition_ids() -> Vec<&'static str> {
    PROPOSITIONS.iter().map(|p| p.id).collect()
}

pub fn anchor_of(id: &str) -> Option<&'static str> {
    PROPOSITIONS.iter().find(|p| p.id == id).map(|p| p.anchor)
}

/// Diagnostic ids in report order.
pub const DIAGNOSTICS: &[&str] = &[
    "prime-extension-not-prime",
    "extension-contraction-differs",
    "irreducible-not-primary",
    "primes-belonging-vary",
];

/// Run the selected propositions on `s`. With a seed, the order in which
/// MC-sets and homomorphisms are visited is shuffled; the report does not
/// depend on it.
pub fn run_checks(
    s: &FiniteSemiring,
    selection: &Selection,
    seed: Option<u64>,
) -> Result<CheckReport> {
    let start = Instant::now();
    let chosen: Vec<&Proposition> = match selection {
        Selection::All => PROPOSITIONS.iter().collect(),
        Selection::Ids(ids) => ids
            .iter()
            .map(|id| {
                PROPOSITIONS
                    .iter()
                    .find(|p| p.id == id)
                    .ok_or_else(|| Error::UnknownPropositionId(id.clone()))
            })
            .collect::<Result<_>>()?,
    };
    s.revalidate()?;
    let ctx = Context::new(s, seed);
    let mut propositions = Vec::with_capacity(chosen.len());
    for p in chosen {
        let mut tally = Tally::default();
        if let Err(e) = (p.run)(&ctx, &mut tally) {
            tally.failures.push(format!("error: {e}"));
        }
        tally.failures.sort();
        propositions.push(PropositionReport {
            id: p.id.to_string(),
            anchor: p.anchor.to_string(),
            instances: tally.instances,
            failures: tally.failures,
        });
    }
    let diagnostics = if *selection == Selection::All {
        run_diagnostics(&ctx)?
    } else {
        Vec::new()
    };
    Ok(CheckReport {
        semiring: s.name().to_string(),
        propositions,
        diagnostics,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

struct Context {
    s: Arc<FiniteSemiring>,
    ideals: Vec<Ideal>,
    proper: Vec<Ideal>,
    primes: Vec<Ideal>,
    maximals: Vec<Ideal>,
    /// MC-sets avoiding 0 with at most [`MC_SET_LIMIT`] members, plus the
    /// complements of primes.
    mcsets: Vec<McSet>,
    homs: Vec<SemiringHom>,
    modules: Vec<FiniteSemimodule>,
}

impl Context {
    fn new(s: &FiniteSemiring, seed: Option<u64>) -> Context {
        let s = Arc::new(s.clone());
        let ideals = s.ideals().ideals().to_vec();
        let proper = ideals.iter().filter(|i| i.is_proper()).copied().collect();
        let spectrum = s.spectrum().clone();

        let mut mcsets: Vec<McSet> = s
            .mc_sets_up_to(MC_SET_LIMIT)
            .into_iter()
            .filter(|u| !u.contains(ZERO))
            .collect();
        for p in spectrum.primes() {
            let w = s.prime_complement(p).expect("prime");
            if !mcsets.contains(&w) {
                mcsets.push(w);
            }
        }
        mcsets.sort();

        let b = Arc::new(gallery::boolean());
        let l3 = Arc::new(gallery::chain(3));
        let mut homs = vec![SemiringHom::identity(&s)];
        for (from, to) in [(&s, &b), (&b, &s), (&s, &l3), (&l3, &s)] {
            homs.extend(enumerate_homs(from, to));
        }
        if s.size() <= 5 {
            homs.extend(enumerate_homs(&s, &s));
        }
        for p in spectrum.primes() {
            if let Ok(loc) = localize_at_prime(&s, p) {
                homs.push(loc.gamma().clone());
            }
        }

        let mut modules = vec![
            FiniteSemimodule::regular(&s),
            FiniteSemimodule::zero_module(&s),
        ];
        if s.size() <= 4 {
            let regular = FiniteSemimodule::regular(&s);
            modules.push(regular.direct_sum(&regular).expect("small direct sum"));
        }

        if let Some(seed) = seed {
            let mut rng = StdRng::seed_from_u64(seed);
            mcsets.shuffle(&mut rng);
            homs.shuffle(&mut rng);
        }
        Context {
            s,
            ideals,
            proper,
            primes: spectrum.primes().to_vec(),
            maximals: spectrum.maximals().to_vec(),
            mcsets,
            homs,
            modules,
        }
    }

    fn fmt(&self, i: &Ideal) -> String {
        self.s.format_ideal(i)
    }

    fn localizations(&self) -> impl Iterator<Item = Result<LocalizationResult>> + '_ {
        self.mcsets.iter().map(|u| localize(&self.s, u))
    }
}

// ---------------------------------------------------------------------------
// independent oracles over the tables

fn sum_set(s: &FiniteSemiring, a: ElementSet, b: ElementSet) -> ElementSet {
    let mut out = ElementSet::EMPTY;
    for x in a {
        for y in b {
            out.insert(s.add(x, y));
        }
    }
    out
}

fn additive_closure(s: &FiniteSemiring, set: ElementSet) -> ElementSet {
    let mut closed = set.with(ZERO);
    loop {
        let next = sum_set(s, closed, closed).union(closed);
        if next == closed {
            return closed;
        }
        closed = next;
    }
}

fn product_set(s: &FiniteSemiring, a: ElementSet, b: ElementSet) -> ElementSet {
    let mut products = ElementSet::EMPTY;
    for x in a {
        for y in b {
            products.insert(s.mul(x, y));
        }
    }
    additive_closure(s, products)
}

fn is_ideal_by_definition(s: &FiniteSemiring, set: ElementSet) -> bool {
    !set.is_empty()
        && set
            .iter()
            .all(|a| set.iter().all(|b| set.contains(s.add(a, b))))
        && set
            .iter()
            .all(|a| s.elements().all(|r| set.contains(s.mul(r, a))))
}

fn radical_by_powers(s: &FiniteSemiring, i: ElementSet) -> ElementSet {
    s.elements()
        .filter(|&x| (1..=s.size() as u32).any(|n| i.contains(s.pow(x, n))))
        .collect()
}

fn colon_by_definition(s: &FiniteSemiring, i: ElementSet, j: ElementSet) -> ElementSet {
    s.elements()
        .filter(|&x| j.iter().all(|y| i.contains(s.mul(x, y))))
        .collect()
}

fn is_prime_by_definition(s: &FiniteSemiring, p: ElementSet) -> bool {
    p != s.all()
        && s.elements().all(|a| {
            s.elements()
                .all(|b| !p.contains(s.mul(a, b)) || p.contains(a) || p.contains(b))
        })
}

fn is_primary_by_definition(s: &FiniteSemiring, q: ElementSet) -> bool {
    let rad = radical_by_powers(s, q);
    q != s.all()
        && s.elements().all(|x| {
            s.elements()
                .all(|y| !q.contains(s.mul(x, y)) || q.contains(x) || rad.contains(y))
        })
}

/// In a finite lattice an element is meet-irreducible iff it is the top or
/// has exactly one upper cover.
fn is_irreducible_by_covers(lattice: &[Ideal], i: &Ideal) -> bool {
    if !i.is_proper() {
        return true;
    }
    let above: Vec<&Ideal> = lattice
        .iter()
        .filter(|j| i.is_subset(j) && *j != i)
        .collect();
    let covers = above
        .iter()
        .filter(|j| !above.iter().any(|k| k.is_subset(j) && k != *j))
        .count();
    covers == 1
}

fn minimal_sets(family: &[Ideal]) -> Vec<Ideal> {
    let mut out: Vec<Ideal> = family
        .iter()
        .filter(|a| !family.iter().any(|b| b.is_subset(a) && b != *a))
        .copied()
        .collect();
    out.sort();
    out.dedup();
    out
}

fn meet(s: &FiniteSemiring, family: &[Ideal]) -> ElementSet {
    family
        .iter()
        .fold(s.all(), |acc, i| acc.intersection(i.members()))
}

// ---------------------------------------------------------------------------
// semirings

fn semiring_axioms(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for a in s.elements() {
        t.check(
            s.add(a, ZERO) == a && s.mul(a, ONE) == a && s.mul(a, ZERO) == ZERO,
            || format!("identity or absorption fails at {}", s.element_name(a)),
        );
        for b in s.elements() {
            t.check(
                s.add(a, b) == s.add(b, a) && s.mul(a, b) == s.mul(b, a),
                || format!("commutativity fails at ({a},{b})"),
            );
            for x in s.elements() {
                let ok = s.add(s.add(a, b), x) == s.add(a, s.add(b, x))
                    && s.mul(s.mul(a, b), x) == s.mul(a, s.mul(b, x))
                    && s.mul(a, s.add(b, x)) == s.add(s.mul(a, b), s.mul(a, x));
                t.check(ok, || format!("associativity or distributivity fails at ({a},{b},{x})"));
            }
        }
    }
    t.check(ZERO != ONE, || "0 = 1".into());
    t.check(s.revalidate().is_ok(), || "re-validation rejects the tables".into());
    for other in [gallery::boolean(), gallery::chain(3)] {
        if s.size() * other.size() <= MAX_ELEMENTS {
            let ok = direct_product(s, &other).map(|p| p.revalidate().is_ok());
            t.check(matches!(ok, Ok(true)), || {
                format!("{} x {} is not a semiring", s.name(), other.name())
            });
        }
    }
    Ok(())
}

fn pow_additive(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for x in s.elements() {
        for m in 1..=4u32 {
            for n in 1..=4u32 {
                t.check(s.pow(x, m + n) == s.mul(s.pow(x, m), s.pow(x, n)), || {
                    format!("{}^({m}+{n})", s.element_name(x))
                });
            }
        }
    }
    Ok(())
}

fn units_group(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    let units = s.units();
    let expected: ElementSet = s
        .elements()
        .filter(|&a| s.elements().any(|b| s.mul(a, b) == ONE))
        .collect();
    t.check(units == expected, || format!("units {units:?}, expected {expected:?}"));
    t.check(units.contains(ONE), || "1 is not a unit".into());
    for a in units {
        t.check(units.iter().any(|b| s.mul(a, b) == ONE), || {
            format!("{} has no inverse among the units", s.element_name(a))
        });
        for b in units {
            t.check(units.contains(s.mul(a, b)), || {
                format!("units not closed at ({a},{b})")
            });
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// ideal calculus

fn ideal_arith(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    let zero = s.zero_ideal();
    let unit = s.unit_ideal();
    for i in &c.ideals {
        t.check(s.add_ideals(i, i)? == *i, || format!("I+I ≠ I for {}", c.fmt(i)));
        t.check(s.add_ideals(i, &zero)? == *i, || format!("I+(0) ≠ I for {}", c.fmt(i)));
        t.check(s.mul_ideals(i, &unit)? == *i, || format!("IS ≠ I for {}", c.fmt(i)));
        t.check(s.mul_ideals(i, &zero)? == zero, || format!("I(0) ≠ (0) for {}", c.fmt(i)));
        t.check(s.add_ideals(i, &unit)? == unit, || format!("I+S ≠ S for {}", c.fmt(i)));
        for j in &c.ideals {
            let sum = s.add_ideals(i, j)?;
            let prod = s.mul_ideals(i, j)?;
            let cap = s.intersect_ideals(i, j)?;
            let w = || format!("I = {}, J = {}", c.fmt(i), c.fmt(j));
            t.check(sum.members() == sum_set(s, i.members(), j.members()), w);
            t.check(is_ideal_by_definition(s, sum.members()), w);
            t.check(prod.members() == product_set(s, i.members(), j.members()), w);
            t.check(is_ideal_by_definition(s, prod.members()), w);
            t.check(sum == s.add_ideals(j, i)? && prod == s.mul_ideals(j, i)?, w);
            t.check(!sum.is_zero() || (i.is_zero() && j.is_zero()), w);
            t.check(prod.is_subset(&cap), w);
            t.check(sum.is_proper() || prod == cap, w);
            t.check(s.mul_ideals(&sum, &cap)?.is_subset(&prod), w);
            for k in &c.ideals {
                let w = || format!("I = {}, J = {}, K = {}", c.fmt(i), c.fmt(j), c.fmt(k));
                t.check(
                    s.add_ideals(i, &s.add_ideals(j, k)?)? == s.add_ideals(&sum, k)?,
                    w,
                );
                t.check(
                    s.mul_ideals(i, &s.mul_ideals(j, k)?)? == s.mul_ideals(&prod, k)?,
                    w,
                );
                t.check(
                    s.mul_ideals(i, &s.add_ideals(j, k)?)?
                        == s.add_ideals(&prod, &s.mul_ideals(i, k)?)?,
                    w,
                );
            }
        }
    }
    Ok(())
}

fn ideal_lattice(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    let zero = s.zero_ideal();
    let unit = s.unit_ideal();
    t.check(c.ideals.first() == Some(&zero), || "(0) is not first".into());
    for i in &c.ideals {
        t.check(zero.is_subset(i) && i.is_subset(&unit), || {
            format!("{} is not between (0) and S", c.fmt(i))
        });
        for j in &c.ideals {
            let sum = s.add_ideals(i, j)?;
            let cap = s.intersect_ideals(i, j)?;
            let uppers: Vec<&Ideal> = c
                .ideals
                .iter()
                .filter(|k| i.is_subset(k) && j.is_subset(k))
                .collect();
            let lowers: Vec<&Ideal> = c
                .ideals
                .iter()
                .filter(|k| k.is_subset(i) && k.is_subset(j))
                .collect();
            let w = || format!("I = {}, J = {}", c.fmt(i), c.fmt(j));
            t.check(
                uppers.contains(&&sum) && uppers.iter().all(|k| sum.is_subset(k)),
                w,
            );
            t.check(
                lowers.contains(&&cap) && lowers.iter().all(|k| k.is_subset(&cap)),
                w,
            );
        }
    }
    Ok(())
}

fn ideal_semiring_check(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    let (ids, order) = ideal_semiring(s, MAX_ELEMENTS)?;
    t.check(ids.revalidate().is_ok(), || "Id(S) fails the axioms".into());
    t.check(ids.is_additively_idempotent(), || "Id(S) is not additively idempotent".into());
    t.check(ids.size() == c.ideals.len(), || "Id(S) has the wrong size".into());
    for (a, i) in order.iter().enumerate() {
        for (b, j) in order.iter().enumerate() {
            let w = || format!("I = {}, J = {}", c.fmt(i), c.fmt(j));
            t.check(order[ids.add(a, b)] == s.add_ideals(i, j)?, w);
            t.check(order[ids.mul(a, b)] == s.mul_ideals(i, j)?, w);
        }
    }
    Ok(())
}

fn colon_laws(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for i in &c.ideals {
        for j in &c.ideals {
            let ij = s.colon(i, j)?;
            let w = || format!("I = {}, J = {}", c.fmt(i), c.fmt(j));
            t.check(ij.members() == colon_by_definition(s, i.members(), j.members()), w);
            t.check(i.is_subset(&ij), w);
            t.check(s.mul_ideals(&ij, j)?.is_subset(i), w);
            t.check(ij == s.colon(i, &s.add_ideals(i, j)?)?, w);
            for k in &c.ideals {
                let w = || format!("I = {}, J = {}, K = {}", c.fmt(i), c.fmt(j), c.fmt(k));
                let left = s.colon(&ij, k)?;
                let middle = s.colon(i, &s.mul_ideals(j, k)?)?;
                let right = s.colon(&s.colon(i, k)?, j)?;
                t.check(left == middle && middle == right, w);
                // two-member families {I, K} on either side of the colon
                t.check(
                    s.colon(&s.intersect_ideals(i, k)?, j)?
                        == s.intersect_ideals(&ij, &s.colon(k, j)?)?,
                    w,
                );
                t.check(
                    s.colon(i, &s.add_ideals(j, k)?)? == s.intersect_ideals(&ij, &s.colon(i, k)?)?,
                    w,
                );
            }
        }
        // the whole lattice as a family
        let over_all: Vec<Ideal> = c
            .ideals
            .iter()
            .map(|j| s.colon(i, j))
            .collect::<Result<_>>()?;
        t.check(
            s.colon(i, &s.sum_of(&c.ideals)?)? == s.intersection_of(&over_all)?,
            || format!("[I:ΣJ] for I = {}", c.fmt(i)),
        );
    }
    Ok(())
}

fn radical_laws(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for i in &c.ideals {
        let r = s.radical(i)?;
        let w = || format!("I = {}", c.fmt(i));
        t.check(r.members() == radical_by_powers(s, i.members()), w);
        t.check(is_ideal_by_definition(s, r.members()), w);
        t.check(i.is_subset(&r) && s.radical(&r)? == r, w);
        t.check(r.is_proper() == i.is_proper(), w);
        for j in &c.ideals {
            let rj = s.radical(j)?;
            let w = || format!("I = {}, J = {}", c.fmt(i), c.fmt(j));
            let of_product = s.radical(&s.mul_ideals(i, j)?)?;
            let of_meet = s.radical(&s.intersect_ideals(i, j)?)?;
            t.check(of_product == of_meet && of_meet == s.intersect_ideals(&r, &rj)?, w);
            t.check(
                s.radical(&s.add_ideals(i, j)?)? == s.radical(&s.add_ideals(&r, &rj)?)?,
                w,
            );
        }
    }
    Ok(())
}

fn cancellation(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for i in &c.ideals {
        for j in &c.ideals {
            let ij = s.mul_ideals(i, j)?;
            t.check(s.mul_ideals(&s.colon(&ij, i)?, i)? == ij, || {
                format!("[IJ:I]I ≠ IJ for I = {}, J = {}", c.fmt(i), c.fmt(j))
            });
        }
        if i.is_zero() {
            continue;
        }
        // the definition, scanned directly
        let mut by_definition = true;
        let mut by_colon = true;
        let mut by_inclusion = true;
        for j in &c.ideals {
            let ij = s.mul_ideals(i, j)?;
            by_colon &= s.colon(&ij, i)? == *j;
            for k in &c.ideals {
                let ik = s.mul_ideals(i, k)?;
                by_definition &= ij != ik || j == k;
                by_inclusion &= !ij.is_subset(&ik) || j.is_subset(k);
            }
        }
        let w = || format!("I = {}", c.fmt(i));
        t.check(by_definition == by_colon && by_colon == by_inclusion, w);
        t.check(s.is_cancellation(i)? == by_definition, w);
        t.check(
            s.is_cancellation_by_colon(i)? == by_colon
                && s.is_cancellation_by_inclusion(i)? == by_inclusion,
            w,
        );
    }
    Ok(())
}

fn cancelable_principal(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for x in s.elements() {
        let cancelable = s
            .elements()
            .all(|b| s.elements().all(|d| s.mul(x, b) != s.mul(x, d) || b == d));
        t.check(cancelable == s.is_cancelable(x), || {
            format!("cancelability of {}", s.element_name(x))
        });
        if cancelable {
            t.check(s.is_cancellation(&s.principal(x))?, || {
                format!("({}) is not a cancellation ideal", s.element_name(x))
            });
        }
    }
    Ok(())
}

fn infinite_distributivity(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for j in &c.ideals {
        for k in 1..=c.ideals.len() {
            for family in [&c.ideals[..k], &c.ideals[c.ideals.len() - k..]] {
                let products: Vec<Ideal> = family
                    .iter()
                    .map(|i| s.mul_ideals(j, i))
                    .collect::<Result<_>>()?;
                t.check(
                    s.mul_ideals(j, &s.sum_of(family)?)? == s.sum_of(&products)?,
                    || format!("J = {}, family of {k}", c.fmt(j)),
                );
            }
        }
    }
    Ok(())
}

fn enumeration_oracle(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    let n = s.size();
    if n > 16 {
        // 2ⁿ subsets is beyond a desk-scale scan; compare closure properties
        for i in &c.ideals {
            t.check(is_ideal_by_definition(s, i.members()), || c.fmt(i));
        }
        return Ok(());
    }
    let mut scanned = Vec::new();
    for bits in 0..(1u64 << n) {
        let set = ElementSet::from_bits(bits);
        let ok = is_ideal_by_definition(s, set);
        t.check(ok == s.is_ideal_set(set), || format!("{set:?}"));
        if ok {
            scanned.push(set);
        }
    }
    let enumerated: Vec<ElementSet> = c.ideals.iter().map(|i| i.members()).collect();
    t.check(scanned == enumerated, || {
        format!("scan finds {} ideals, closure {}", scanned.len(), enumerated.len())
    });
    Ok(())
}

// ---------------------------------------------------------------------------
// primes and maximals

fn prime_ideal_pairs(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for p in &c.ideals {
        let elementwise = is_prime_by_definition(s, p.members());
        let by_pairs = p.is_proper()
            && c.ideals.iter().all(|i| {
                c.ideals.iter().all(|j| {
                    let prod = s.mul_ideals(i, j).expect("same parent");
                    !prod.is_subset(p) || i.is_subset(p) || j.is_subset(p)
                })
            });
        let w = || format!("P = {}", c.fmt(p));
        t.check(elementwise == by_pairs, w);
        t.check(s.is_prime(p)? == elementwise && s.is_prime_by_ideals(p)? == by_pairs, w);
        t.check(c.primes.contains(p) == elementwise, w);
    }
    Ok(())
}

fn prime_complement_mcset(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for p in &c.ideals {
        let rest = p.members().complement(s.size());
        let closed = rest.contains(ONE)
            && rest
                .iter()
                .all(|a| rest.iter().all(|b| rest.contains(s.mul(a, b))));
        let proper_and_closed = p.is_proper() && closed;
        t.check(s.is_prime(p)? == proper_and_closed, || format!("P = {}", c.fmt(p)));
    }
    Ok(())
}

fn prime_containing_ideals(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    let n = c.ideals.len();
    let mut tuples: Vec<Vec<Ideal>> = Vec::new();
    for a in 0..n {
        tuples.push(vec![c.ideals[a]]);
        for b in a..n {
            tuples.push(vec![c.ideals[a], c.ideals[b]]);
            for d in b..n {
                tuples.push(vec![c.ideals[a], c.ideals[b], c.ideals[d]]);
            }
        }
    }
    for p in &c.primes {
        for tuple in &tuples {
            let some = tuple.iter().any(|i| i.is_subset(p));
            let cap = s.intersection_of(tuple)?.is_subset(p);
            let prod = s.product_of(tuple)?.is_subset(p);
            t.check(some == cap && cap == prod, || {
                let names: Vec<String> = tuple.iter().map(|i| c.fmt(i)).collect();
                format!("P = {}, ideals {}", c.fmt(p), names.join(" "))
            });
        }
    }
    Ok(())
}

fn maxisprime(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for w in &c.mcsets {
        let found = s.maximal_disjoint_ideals(w)?;
        let disjoint: Vec<Ideal> = c
            .ideals
            .iter()
            .filter(|i| i.members().is_disjoint(w.members()))
            .copied()
            .collect();
        let expected: Vec<Ideal> = disjoint
            .iter()
            .filter(|i| !disjoint.iter().any(|j| i.is_subset(j) && j != *i))
            .copied()
            .collect();
        let label = || s.format_set(w.members());
        t.check(found == expected, || format!("W = {}", label()));
        t.check(!found.is_empty(), || format!("no ideal avoids W = {}", label()));
        for p in &found {
            t.check(is_prime_by_definition(s, p.members()), || {
                format!("{} maximal off W = {} is not prime", c.fmt(p), label())
            });
        }
    }
    let with_zero = s.mc_closure(ElementSet::singleton(ZERO));
    t.check(
        matches!(s.maximal_disjoint_ideals(&with_zero), Err(Error::EmptyFamily)),
        || "an MC-set containing 0 is not flagged".into(),
    );
    Ok(())
}

fn max_is_prime(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    t.check(!c.maximals.is_empty(), || "no maximal ideal".into());
    let expected: Vec<Ideal> = c
        .proper
        .iter()
        .filter(|m| !c.proper.iter().any(|j| m.is_subset(j) && j != *m))
        .copied()
        .collect();
    t.check(c.maximals == expected, || "Max(S) differs from a lattice scan".into());
    for m in &c.maximals {
        t.check(is_prime_by_definition(s, m.members()), || {
            format!("{} is not prime", c.fmt(m))
        });
    }
    Ok(())
}

fn proper_in_maximal(c: &Context, t: &mut Tally) -> Result<()> {
    for i in &c.proper {
        t.check(c.maximals.iter().any(|m| i.is_subset(m)), || c.fmt(i));
    }
    Ok(())
}

fn zariski(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    let v = |i: &Ideal| -> BTreeSet<Ideal> {
        c.primes.iter().filter(|p| i.is_subset(p)).copied().collect()
    };
    let all_primes: BTreeSet<Ideal> = c.primes.iter().copied().collect();
    t.check(v(&s.zero_ideal()) == all_primes, || "V(0) ≠ Spec(S)".into());
    t.check(v(&s.unit_ideal()).is_empty(), || "V(S) ≠ ∅".into());
    for i in &c.ideals {
        let library: BTreeSet<Ideal> = s.v_of(i)?.into_iter().collect();
        t.check(library == v(i), || format!("V({})", c.fmt(i)));
        t.check(v(i).is_empty() != i.is_proper(), || format!("V({})", c.fmt(i)));
        for j in &c.ideals {
            let w = || format!("I = {}, J = {}", c.fmt(i), c.fmt(j));
            let union: BTreeSet<Ideal> = v(i).union(&v(j)).copied().collect();
            t.check(union == v(&s.intersect_ideals(i, j)?), w);
            let meet: BTreeSet<Ideal> = v(i).intersection(&v(j)).copied().collect();
            t.check(meet == v(&s.add_ideals(i, j)?), w);
            for k in &c.ideals {
                let meet3: BTreeSet<Ideal> = meet.intersection(&v(k)).copied().collect();
                t.check(meet3 == v(&s.sum_of([i, j, k])?), || {
                    format!("I = {}, J = {}, K = {}", c.fmt(i), c.fmt(j), c.fmt(k))
                });
            }
        }
    }
    Ok(())
}

fn krull_radical(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for i in &c.ideals {
        let above = s.v_of(i)?;
        let cap = meet(s, &above);
        t.check(s.radical(i)?.members() == cap, || {
            format!("√{} ≠ {}", c.fmt(i), s.format_set(cap))
        });
    }
    Ok(())
}

fn units_maximal(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    let covered = c
        .maximals
        .iter()
        .fold(ElementSet::EMPTY, |acc, m| acc.union(m.members()));
    for x in s.elements() {
        t.check(s.is_unit(x) != covered.contains(x), || s.element_name(x).to_string());
    }
    t.check(s.units() == covered.complement(s.size()), || "U(S) ≠ S − ∪Max".into());
    Ok(())
}

fn local_criterion(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    let nonunits = s.units().complement(s.size());
    let nonunits_ideal = is_ideal_by_definition(s, nonunits);
    t.check((c.maximals.len() == 1) == nonunits_ideal, || {
        format!("{} maximal ideals, S − U(S) ideal: {nonunits_ideal}", c.maximals.len())
    });
    t.check(s.is_local() == nonunits_ideal, || "is_local disagrees".into());
    let local = s.local_ideal()?;
    t.check(local.map(|m| m.members()) == nonunits_ideal.then_some(nonunits), || {
        "local ideal differs from S − U(S)".into()
    });
    let semifield = s.elements().filter(|&x| x != ZERO).all(|x| s.is_unit(x));
    t.check(semifield == s.is_semifield(), || "is_semifield disagrees".into());
    t.check(semifield == c.maximals.contains(&s.zero_ideal()), || {
        "semifield iff (0) maximal fails".into()
    });
    Ok(())
}

fn comaximal(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for i in &c.ideals {
        for j in &c.ideals {
            let co = s.is_comaximal(i, j)?;
            let w = || format!("I = {}, J = {}", c.fmt(i), c.fmt(j));
            t.check(co == !s.add_ideals(i, j)?.is_proper(), w);
            t.check(!co || s.intersect_ideals(i, j)? == s.mul_ideals(i, j)?, w);
            t.check(co == s.is_comaximal(&s.radical(i)?, &s.radical(j)?)?, w);
        }
    }
    // pairwise comaximal families of two to four ideals
    fn grow(
        c: &Context,
        t: &mut Tally,
        family: &mut Vec<Ideal>,
        start: usize,
    ) -> Result<()> {
        let s = &*c.s;
        if family.len() >= 2 {
            t.check(s.intersection_of(&*family)? == s.product_of(&*family)?, || {
                let names: Vec<String> = family.iter().map(|i| c.fmt(i)).collect();
                format!("family {}", names.join(" "))
            });
        }
        if family.len() == 4 {
            return Ok(());
        }
        for k in start..c.ideals.len() {
            let next = c.ideals[k];
            let mut ok = true;
            for f in family.iter() {
                ok &= s.is_comaximal(f, &next)?;
            }
            if ok {
                family.push(next);
                grow(c, t, family, k + 1)?;
                family.pop();
            }
        }
        Ok(())
    }
    grow(c, t, &mut Vec::new(), 0)?;
    // all sets of distinct maximal ideals
    let m = c.maximals.len().min(12);
    for mask in 1u32..(1 << m) {
        let family: Vec<Ideal> = (0..m)
            .filter(|k| mask & (1 << k) != 0)
            .map(|k| c.maximals[k])
            .collect();
        let mut pairwise = true;
        for (a, x) in family.iter().enumerate() {
            for y in &family[a + 1..] {
                pairwise &= s.is_comaximal(x, y)?;
            }
        }
        t.check(
            pairwise && s.intersection_of(&family)? == s.product_of(&family)?,
            || format!("maximal family {mask:b}"),
        );
    }
    Ok(())
}

fn semilocal(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    t.check(
        !c.maximals.is_empty() && c.maximals.len() <= c.ideals.len(),
        || "Max(S) is empty".into(),
    );
    let mut prefix = s.unit_ideal();
    for m in &c.maximals {
        let next = s.mul_ideals(&prefix, m)?;
        t.check(next.is_subset(&prefix) && next != prefix, || {
            format!("product chain stalls at {}", c.fmt(m))
        });
        prefix = next;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// primary ideals

fn primary_radical_prime(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for q in &c.ideals {
        let primary = is_primary_by_definition(s, q.members());
        t.check(s.is_primary(q)? == primary, || format!("Q = {}", c.fmt(q)));
        if primary {
            let r = s.radical(q)?;
            let w = || format!("Q = {}", c.fmt(q));
            t.check(is_prime_by_definition(s, r.members()), w);
            t.check(
                c.primes.iter().filter(|p| q.is_subset(p)).all(|p| r.is_subset(p)),
                w,
            );
        }
    }
    Ok(())
}

fn primary_maximal_radical(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for q in &c.proper {
        if c.maximals.contains(&s.radical(q)?) {
            t.check(is_primary_by_definition(s, q.members()), || {
                format!("{} has maximal radical but is not primary", c.fmt(q))
            });
        }
    }
    for m in &c.maximals {
        for n in 1..=3 {
            let power = s.ideal_power(m, n)?;
            t.check(is_primary_by_definition(s, power.members()), || {
                format!("{}^{n} is not primary", c.fmt(m))
            });
        }
    }
    Ok(())
}

fn primary_intersection(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for p in &c.primes {
        let mut family = Vec::new();
        for q in &c.proper {
            if is_primary_by_definition(s, q.members()) && s.radical(q)? == *p {
                family.push(*q);
            }
        }
        let n = family.len();
        for a in 0..n {
            for b in a..n {
                for d in b..n {
                    let group = [family[a], family[b], family[d]];
                    let cap = s.intersection_of(&group)?;
                    t.check(
                        is_primary_by_definition(s, cap.members()) && s.radical(&cap)? == *p,
                        || {
                            format!(
                                "{} ∩ {} ∩ {} is not {}-primary",
                                c.fmt(&group[0]),
                                c.fmt(&group[1]),
                                c.fmt(&group[2]),
                                c.fmt(p)
                            )
                        },
                    );
                }
            }
        }
    }
    Ok(())
}

fn primary_colon(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for q in &c.proper {
        if !is_primary_by_definition(s, q.members()) {
            continue;
        }
        let p = s.radical(q)?;
        for x in s.elements() {
            let colon = s.colon_element(q, x)?;
            let w = || format!("Q = {}, x = {}", c.fmt(q), s.element_name(x));
            t.check(
                colon.members() == colon_by_definition(s, q.members(), ElementSet::singleton(x)),
                w,
            );
            if q.contains(x) {
                t.check(!colon.is_proper(), w);
            } else {
                t.check(
                    is_primary_by_definition(s, colon.members()) && s.radical(&colon)? == p,
                    w,
                );
            }
            if !p.contains(x) {
                t.check(colon == *q, w);
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// homomorphisms

fn preimage(f: &SemiringHom, set: ElementSet) -> ElementSet {
    f.source()
        .elements()
        .filter(|&e| set.contains(f.apply(e)))
        .collect()
}

fn hom_contraction(c: &Context, t: &mut Tally) -> Result<()> {
    for f in &c.homs {
        let (src, dst) = (f.source(), f.target());
        t.check(validate_hom(src, dst, f.map().to_vec()).is_ok(), || {
            format!("fixture {:?} is not a homomorphism", f.map())
        });
        let targets = dst.ideals().ideals();
        for j1 in targets {
            let c1 = f.contract(j1)?;
            let w = || format!("{}→{} {:?}, J = {}", src.name(), dst.name(), f.map(), dst.format_ideal(j1));
            t.check(c1.members() == preimage(f, j1.members()), w);
            t.check(src.radical(&c1)? == f.contract(&dst.radical(j1)?)?, w);
            if dst.is_prime(j1)? {
                t.check(is_prime_by_definition(src, c1.members()), w);
            }
            for j2 in targets {
                let c2 = f.contract(j2)?;
                let w = || {
                    format!(
                        "{}→{} {:?}, J₁ = {}, J₂ = {}",
                        src.name(),
                        dst.name(),
                        f.map(),
                        dst.format_ideal(j1),
                        dst.format_ideal(j2)
                    )
                };
                t.check(
                    src.add_ideals(&c1, &c2)?.is_subset(&f.contract(&dst.add_ideals(j1, j2)?)?),
                    w,
                );
                t.check(
                    f.contract(&dst.intersect_ideals(j1, j2)?)? == src.intersect_ideals(&c1, &c2)?,
                    w,
                );
                t.check(
                    src.mul_ideals(&c1, &c2)?.is_subset(&f.contract(&dst.mul_ideals(j1, j2)?)?),
                    w,
                );
            }
        }
    }
    Ok(())
}

fn hom_extension(c: &Context, t: &mut Tally) -> Result<()> {
    for f in &c.homs {
        let (src, dst) = (f.source(), f.target());
        let sources = src.ideals().ideals();
        for i1 in sources {
            let e1 = f.extend(i1)?;
            let w = || format!("{}→{} {:?}, I = {}", src.name(), dst.name(), f.map(), src.format_ideal(i1));
            let image: ElementSet = i1.members().iter().map(|x| f.apply(x)).collect();
            t.check(e1.members() == product_set(dst, image, dst.all()), w);
            t.check(f.extend(&src.radical(i1)?)?.is_subset(&dst.radical(&e1)?), w);
            for i2 in sources {
                let e2 = f.extend(i2)?;
                let w = || {
                    format!(
                        "{}→{} {:?}, I₁ = {}, I₂ = {}",
                        src.name(),
                        dst.name(),
                        f.map(),
                        src.format_ideal(i1),
                        src.format_ideal(i2)
                    )
                };
                t.check(f.extend(&src.add_ideals(i1, i2)?)? == dst.add_ideals(&e1, &e2)?, w);
                t.check(
                    f.extend(&src.intersect_ideals(i1, i2)?)?.is_subset(&dst.intersect_ideals(&e1, &e2)?),
                    w,
                );
                t.check(f.extend(&src.mul_ideals(i1, i2)?)? == dst.mul_ideals(&e1, &e2)?, w);
            }
        }
    }
    Ok(())
}

fn hom_ec_ce(c: &Context, t: &mut Tally) -> Result<()> {
    for f in &c.homs {
        let (src, dst) = (f.source(), f.target());
        for i in src.ideals() {
            let e = f.extend(i)?;
            let ec = f.contract(&e)?;
            t.check(i.is_subset(&ec) && f.extend(&ec)? == e, || {
                format!("{}→{} {:?}, I = {}", src.name(), dst.name(), f.map(), src.format_ideal(i))
            });
        }
        for j in dst.ideals() {
            let cj = f.contract(j)?;
            let ce = f.extend(&cj)?;
            t.check(ce.is_subset(j) && f.contract(&ce)? == cj, || {
                format!("{}→{} {:?}, J = {}", src.name(), dst.name(), f.map(), dst.format_ideal(j))
            });
        }
        t.check(f.kernel() == f.contract(&dst.zero_ideal())?, || {
            format!("kernel of {:?}", f.map())
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// fractions

fn fraction_equivalence(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for loc in c.localizations() {
        let loc = loc?;
        let q = loc.quotient();
        let pairs: Vec<(usize, usize)> = s
            .elements()
            .flat_map(|x| loc.denominators().iter().map(move |&u| (x, u)))
            .collect();
        let label = || s.format_set(loc.mcset().members());
        let related: Vec<Vec<bool>> = pairs
            .iter()
            .map(|&a| pairs.iter().map(|&b| loc.related(a, b)).collect())
            .collect();
        for a in 0..pairs.len() {
            t.check(related[a][a], || format!("U = {}: not reflexive", label()));
            for b in 0..pairs.len() {
                t.check(related[a][b] == related[b][a], || {
                    format!("U = {}: not symmetric at {:?} {:?}", label(), pairs[a], pairs[b])
                });
                let same_class =
                    loc.class_of(pairs[a].0, pairs[a].1)? == loc.class_of(pairs[b].0, pairs[b].1)?;
                t.check(same_class == related[a][b], || {
                    format!("U = {}: classes disagree with ~ at {:?} {:?}", label(), pairs[a], pairs[b])
                });
                if related[a][b] {
                    for (d, &linked) in related[b].iter().enumerate() {
                        if linked {
                            t.check(related[a][d], || {
                                format!("U = {}: not transitive", label())
                            });
                        }
                    }
                }
            }
        }
        // fraction arithmetic on every pair of representatives
        for &(x, u) in &pairs {
            for &(y, v) in &pairs {
                let cx = loc.class_of(x, u)?;
                let cy = loc.class_of(y, v)?;
                let sum = loc.class_of(s.add(s.mul(x, v), s.mul(y, u)), s.mul(u, v))?;
                let prod = loc.class_of(s.mul(x, y), s.mul(u, v))?;
                t.check(q.add(cx, cy) == sum && q.mul(cx, cy) == prod, || {
                    format!("U = {}: arithmetic at {x}/{u}, {y}/{v}", label())
                });
            }
        }
        t.check(q.revalidate().is_ok(), || format!("U = {}: S_U is not a semiring", label()));
        t.check(
            validate_hom(loc.base(), q, loc.gamma().map().to_vec()).is_ok(),
            || format!("U = {}: γ is not a homomorphism", label()),
        );
    }
    let with_zero = s.mc_closure(ElementSet::singleton(ZERO));
    t.check(
        matches!(localize(&c.s, &with_zero), Err(Error::DegenerateLocalization)),
        || "0 ∈ U is not flagged".into(),
    );
    Ok(())
}

fn localize_by_definition(loc: &LocalizationResult, i: &Ideal) -> Result<ElementSet> {
    let mut out = ElementSet::EMPTY;
    for x in i.members() {
        for &u in loc.denominators() {
            out.insert(loc.class_of(x, u)?);
        }
    }
    Ok(out)
}

fn localized_ideals(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for loc in c.localizations() {
        let loc = loc?;
        let q = loc.quotient();
        let label = || s.format_set(loc.mcset().members());
        let localized: Vec<Ideal> = c
            .ideals
            .iter()
            .map(|i| loc.localize_ideal(i))
            .collect::<Result<_>>()?;
        for (a, i) in c.ideals.iter().enumerate() {
            let by_definition = localize_by_definition(&loc, i)?;
            t.check(
                localized[a].members() == by_definition && loc.gamma().extend(i)? == localized[a],
                || format!("U = {}: I_U ≠ I·S_U for I = {}", label(), c.fmt(i)),
            );
            for (b, j) in c.ideals.iter().enumerate() {
                let w = || format!("U = {}, I = {}, I′ = {}", label(), c.fmt(i), c.fmt(j));
                if i.is_subset(j) {
                    t.check(localized[a].is_subset(&localized[b]), w);
                }
                t.check(
                    loc.localize_ideal(&s.add_ideals(i, j)?)?
                        == q.add_ideals(&localized[a], &localized[b])?,
                    w,
                );
                t.check(
                    loc.localize_ideal(&s.intersect_ideals(i, j)?)?
                        == q.intersect_ideals(&localized[a], &localized[b])?,
                    w,
                );
            }
        }
    }
    Ok(())
}

fn extended_ideals(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for loc in c.localizations() {
        let loc = loc?;
        for j in loc.quotient().ideals() {
            let contracted = loc.contract(j)?;
            t.check(loc.localize_ideal(&contracted)? == *j, || {
                format!(
                    "U = {}: J = {} is not extended",
                    s.format_set(loc.mcset().members()),
                    loc.quotient().format_ideal(j)
                )
            });
        }
    }
    Ok(())
}

fn prime_correspondence(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for loc in c.localizations() {
        let loc = loc?;
        let label = || s.format_set(loc.mcset().members());
        let pairs = loc.prime_correspondence();
        t.check(pairs.is_ok(), || format!("U = {}: {:?}", label(), pairs.as_ref().err()));
        let disjoint: Vec<Ideal> = c
            .primes
            .iter()
            .filter(|p| p.members().is_disjoint(loc.mcset().members()))
            .copied()
            .collect();
        let quotient_primes: Vec<Ideal> = loc
            .quotient()
            .ideals()
            .iter()
            .filter(|p| is_prime_by_definition(loc.quotient(), p.members()))
            .copied()
            .collect();
        t.check(disjoint.len() == quotient_primes.len(), || {
            format!("U = {}: {} primes avoid U, S_U has {}", label(), disjoint.len(), quotient_primes.len())
        });
        let mut contracted = Vec::new();
        for p in &quotient_primes {
            contracted.push(loc.contract(p)?);
        }
        contracted.sort();
        t.check(contracted == disjoint, || {
            format!("U = {}: contraction is not onto the disjoint primes", label())
        });
        if let Ok(pairs) = pairs {
            let mut images: Vec<Ideal> = pairs.iter().map(|&(_, q)| q).collect();
            images.sort();
            images.dedup();
            t.check(images.len() == pairs.len(), || format!("U = {}: not injective", label()));
        }
    }
    Ok(())
}

fn local_at_prime(c: &Context, t: &mut Tally) -> Result<()> {
    for p in &c.primes {
        let loc = localize_at_prime(&c.s, p)?;
        let q = loc.quotient();
        let maximal = localize_by_definition(&loc, p)?;
        let w = || format!("P = {}", c.fmt(p));
        let qmax: Vec<Ideal> = q.spectrum().maximals().to_vec();
        t.check(qmax.len() == 1 && qmax[0].members() == maximal, w);
        t.check(q.units() == maximal.complement(q.size()), w);
        let below: Vec<Ideal> = c.primes.iter().filter(|r| r.is_subset(p)).copied().collect();
        let mut contracted = Vec::new();
        for r in q.spectrum().primes() {
            contracted.push(loc.contract(r)?);
        }
        contracted.sort();
        t.check(contracted == below, || {
            format!("P = {}: primes of S_P do not match primes inside P", c.fmt(p))
        });
    }
    Ok(())
}

fn gamma_kernel(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for loc in c.localizations() {
        let loc = loc?;
        for x in s.elements() {
            let killed = loc.denominators().iter().any(|&u| s.mul(u, x) == ZERO);
            t.check((loc.gamma().apply(x) == ZERO) == killed, || {
                format!(
                    "U = {}, x = {}",
                    s.format_set(loc.mcset().members()),
                    s.element_name(x)
                )
            });
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// semimodules

fn semimodule_localization(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    let mcsets: Vec<&McSet> = c
        .mcsets
        .iter()
        .filter(|u| u.len() <= MODULE_MC_SET_LIMIT)
        .collect();
    for m in &c.modules {
        let subs = m.submodules();
        for u in &mcsets {
            let label = || format!("|M| = {}, U = {}", m.size(), s.format_set(u.members()));
            let loc = localize_module_with(m, localize(&c.s, u)?)?;
            let lm = loc.module();
            t.check(loc.gamma_kernel_violations().is_empty(), || format!("{}: γ kernel", label()));
            if u.len() == 1 {
                t.check(lm.size() == m.size(), || format!("{}: M_U ≇ M", label()));
            }
            let localized: Vec<_> = subs
                .iter()
                .map(|k| loc.localize_submodule(k))
                .collect::<Result<_>>()?;
            for (a, k) in subs.iter().enumerate() {
                for (b, l) in subs.iter().enumerate() {
                    let w = || {
                        format!(
                            "{}: K = {}, L = {}",
                            label(),
                            m.format_set(k.members()),
                            m.format_set(l.members())
                        )
                    };
                    if k.is_subset(l) {
                        t.check(localized[a].is_subset(&localized[b]), w);
                    }
                    t.check(
                        loc.localize_submodule(&m.module_sum(k, l)?)?
                            == lm.module_sum(&localized[a], &localized[b])?,
                        w,
                    );
                    t.check(
                        loc.localize_submodule(&m.module_intersect(k, l)?)?
                            == lm.module_intersect(&localized[a], &localized[b])?,
                        w,
                    );
                }
                for i in &c.ideals {
                    t.check(
                        loc.localize_submodule(&m.ideal_action(i, k)?)?
                            == lm.ideal_action(&loc.ring().localize_ideal(i)?, &localized[a])?,
                        || format!("{}: I = {}, L = {}", label(), c.fmt(i), m.format_set(k.members())),
                    );
                }
            }
        }
    }
    Ok(())
}

fn annihilator_ideal(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for m in &c.modules {
        for x in 0..m.size() {
            let ann = m.annihilator(x)?;
            let expected: ElementSet = s.elements().filter(|&a| m.act(a, x) == m.zero()).collect();
            t.check(
                ann.members() == expected && is_ideal_by_definition(s, expected),
                || format!("|M| = {}, x = {}", m.size(), m.element_name(x)),
            );
        }
        t.check(!m.annihilator(m.zero())?.is_proper(), || "Ann(0) ≠ S".into());
    }
    Ok(())
}

fn local_global_zero(c: &Context, t: &mut Tally) -> Result<()> {
    for m in &c.modules {
        let report = is_zero_locally(m)?;
        t.check(report.agreed() == Some(m.size() == 1), || {
            format!("|M| = {}: {report:?}", m.size())
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// decompositions

fn irreducible_separating(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for i in &c.proper {
        for x in s.elements().filter(|&x| !i.contains(x)) {
            let j = s.irreducible_separating(i, x)?;
            let w = || format!("I = {}, s = {}", c.fmt(i), s.element_name(x));
            t.check(i.is_subset(&j) && !j.contains(x), w);
            t.check(is_irreducible_by_covers(&c.ideals, &j), w);
            t.check(
                !c.ideals
                    .iter()
                    .any(|k| j.is_subset(k) && *k != j && !k.contains(x)),
                w,
            );
        }
    }
    Ok(())
}

fn irreducible_decomposition(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for i in &c.ideals {
        t.check(s.is_irreducible(i)? == is_irreducible_by_covers(&c.ideals, i), || {
            format!("irreducibility of {}", c.fmt(i))
        });
    }
    for i in &c.proper {
        let d = s.irreducible_decomposition(i)?;
        let w = || format!("I = {}", c.fmt(i));
        t.check(d.kind == DecompositionKind::Irreducible, w);
        t.check(meet(s, &d.components) == i.members(), w);
        t.check(
            d.components.iter().all(|q| is_irreducible_by_covers(&c.ideals, q)),
            w,
        );
        let above: Vec<Ideal> = c
            .ideals
            .iter()
            .filter(|j| i.is_subset(j) && is_irreducible_by_covers(&c.ideals, j))
            .copied()
            .collect();
        t.check(meet(s, &above) == i.members(), w);
    }
    t.check(
        matches!(s.irreducible_decomposition(&s.unit_ideal()), Err(Error::ImproperIdeal)),
        || "S is not rejected".into(),
    );
    Ok(())
}

fn subtractive_irreducible_primary(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for i in &c.proper {
        if !is_irreducible_by_covers(&c.ideals, i) {
            continue;
        }
        let subtractive = s.is_subtractive(i)?;
        t.check(!subtractive || is_primary_by_definition(s, i.members()), || {
            format!("{} is subtractive and irreducible but not primary", c.fmt(i))
        });
    }
    Ok(())
}

fn check_primary_family(c: &Context, d: &Decomposition) -> bool {
    let s = &*c.s;
    d.kind == DecompositionKind::Primary
        && meet(s, &d.components) == d.target.members()
        && d.components
            .iter()
            .all(|q| is_primary_by_definition(s, q.members()))
}

fn primary_decomposition(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    let subtractive = c.ideals.iter().all(|i| s.is_subtractive(i).unwrap_or(false));
    t.check(subtractive == s.is_subtractive_semiring(), || {
        "is_subtractive_semiring disagrees".into()
    });
    for i in &c.proper {
        let w = || format!("I = {}", c.fmt(i));
        match s.primary_decomposition(i) {
            Ok(d) => {
                t.check(check_primary_family(c, &d), w);
                if subtractive {
                    t.check(!d.repaired, w);
                }
            }
            Err(Error::NoPrimaryDecomposition { .. }) if !subtractive => {
                t.check(true, w);
            }
            Err(e) => t.check(false, || format!("I = {}: {e}", c.fmt(i))),
        }
    }
    Ok(())
}

fn minimal_decomposition(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for i in &c.proper {
        let Ok(d) = s.primary_decomposition(i) else {
            continue;
        };
        let m = s.minimize(&d)?;
        let w = || format!("I = {}", c.fmt(i));
        t.check(m.minimal && check_primary_family(c, &m), w);
        let radicals: Vec<ElementSet> = m
            .components
            .iter()
            .map(|q| radical_by_powers(s, q.members()))
            .collect();
        let distinct: BTreeSet<ElementSet> = radicals.iter().copied().collect();
        t.check(distinct.len() == radicals.len(), w);
        for k in 0..m.components.len() {
            let others: Vec<Ideal> = m
                .components
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, q)| *q)
                .collect();
            t.check(
                others.is_empty() || !meet(s, &others).is_subset(m.components[k].members()),
                w,
            );
        }
        t.check(s.minimize(&m)?.components == m.components, w);
    }
    Ok(())
}

fn minimal_primes(c: &Context, t: &mut Tally) -> Result<()> {
    let s = &*c.s;
    for i in &c.proper {
        if s.primary_decomposition(i).is_err() {
            continue;
        }
        let found = s.minimal_primes(i)?;
        let above: Vec<Ideal> = c.primes.iter().filter(|p| i.is_subset(p)).copied().collect();
        let w = || format!("I = {}", c.fmt(i));
        t.check(found == minimal_sets(&above), w);
        for p in &above {
            t.check(found.iter().any(|m| m.is_subset(p)), w);
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// diagnostics

fn run_diagnostics(c: &Context) -> Result<Vec<Diagnostic>> {
    let s = &*c.s;
    let mut prime_extension = Vec::new();
    for f in &c.homs {
        for p in f.source().spectrum().primes() {
            let e = f.extend(p)?;
            if !f.target().is_prime(&e)? {
                prime_extension.push(format!(
                    "{}→{} {:?}: {} extends to {}",
                    f.source().name(),
                    f.target().name(),
                    f.map(),
                    f.source().format_ideal(p),
                    f.target().format_ideal(&e)
                ));
            }
        }
    }
    let mut ec_differs = Vec::new();
    for loc in c.localizations() {
        let loc = loc?;
        for i in &c.ideals {
            let ec = loc.contract(&loc.localize_ideal(i)?)?;
            if ec != *i {
                ec_differs.push(format!(
                    "U = {}: I = {}, Iᵉᶜ = {}",
                    s.format_set(loc.mcset().members()),
                    c.fmt(i),
                    c.fmt(&ec)
                ));
            }
        }
    }
    let mut irreducible = Vec::new();
    for i in &c.proper {
        if is_irreducible_by_covers(&c.ideals, i)
            && !s.is_subtractive(i)?
            && !is_primary_by_definition(s, i.members())
        {
            irreducible.push(c.fmt(i));
        }
    }
    let mut varying = Vec::new();
    for i in &c.proper {
        let primaries: Vec<Ideal> = c
            .ideals
            .iter()
            .filter(|q| i.is_subset(q) && is_primary_by_definition(s, q.members()))
            .copied()
            .collect();
        let mut prime_sets: BTreeSet<Vec<ElementSet>> = BTreeSet::new();
        let n = primaries.len();
        let mut consider = |family: &[Ideal]| {
            if meet(s, family) != i.members() {
                return;
            }
            let d = Decomposition {
                target: *i,
                components: family.to_vec(),
                kind: DecompositionKind::Primary,
                minimal: true,
                repaired: false,
            };
            if s.check_decomposition(&d).is_ok() {
                let mut radicals: Vec<ElementSet> = family
                    .iter()
                    .map(|q| radical_by_powers(s, q.members()))
                    .collect();
                radicals.sort();
                prime_sets.insert(radicals);
            }
        };
        for a in 0..n {
            consider(&[primaries[a]]);
            for b in a + 1..n {
                consider(&[primaries[a], primaries[b]]);
                for d in b + 1..n {
                    consider(&[primaries[a], primaries[b], primaries[d]]);
                }
            }
        }
        if prime_sets.len() > 1 {
            varying.push(format!("I = {}: {} prime sets", c.fmt(i), prime_sets.len()));
        }
    }
    for list in [&mut prime_extension, &mut ec_differs, &mut irreducible, &mut varying] {
        list.sort();
        list.dedup();
    }
    Ok(vec![
        Diagnostic {
            id: DIAGNOSTICS[0].into(),
            description: "a prime whose extension along a fixture homomorphism is not prime".into(),
            witnesses: prime_extension,
        },
        Diagnostic {
            id: DIAGNOSTICS[1].into(),
            description: "an ideal with Iᵉᶜ ≠ I under localization".into(),
            witnesses: ec_differs,
        },
        Diagnostic {
            id: DIAGNOSTICS[2].into(),
            description: "an irreducible ideal that is neither subtractive nor primary".into(),
            witnesses: irreducible,
        },
        Diagnostic {
            id: DIAGNOSTICS[3].into(),
            description: "an ideal with minimal primary decompositions of different radicals".into(),
            witnesses: varying,
        },
    ])
}
