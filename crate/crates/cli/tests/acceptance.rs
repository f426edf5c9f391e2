//! Acceptance suite. Prints one line per criterion and exits nonzero if any
//! criterion fails.

use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use semiring_ideals::gallery;
use semiring_ideals::semiring::law;
use semiring_ideals::{
    enumerate_ideals, localize_at_prime, run_checks, validate_hom, validate_semiring,
    ElementSet, Error, FiniteSemiring, RawSemiring, Selection, SemiringHom,
};
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, u64);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Run the given propositions on every gallery member and require zero
/// failures and at least one instance per proposition.
fn propositions(ids: &[&str]) -> Result<u64, String> {
    let selection = Selection::Ids(ids.iter().map(|x| x.to_string()).collect());
    let mut total = 0;
    for s in gallery::gallery() {
        let report = run_checks(&s, &selection, None).map_err(|e| e.to_string())?;
        for p in &report.propositions {
            ensure(p.failures.is_empty(), || {
                format!("{} on {}: {}", p.id, s.name(), p.failures[0])
            })?;
            ensure(p.instances > 0, || format!("{} on {}: no instances", p.id, s.name()))?;
            total += p.instances;
        }
    }
    Ok(total)
}

fn holds(raw: &RawSemiring, law_name: &str, w: &[usize]) -> bool {
    let a = |x: usize, y: usize| raw.add[x][y];
    let m = |x: usize, y: usize| raw.mul[x][y];
    let (z, o) = (raw.zero, raw.one);
    match (law_name, w) {
        (law::ADD_IDENTITY, &[x]) => a(z, x) == x && a(x, z) == x,
        (law::MUL_IDENTITY, &[x]) => m(o, x) == x && m(x, o) == x,
        (law::ABSORPTION, &[x]) => m(z, x) == z && m(x, z) == z,
        (law::ADD_COMMUTATIVE, &[x, y]) => a(x, y) == a(y, x),
        (law::MUL_COMMUTATIVE, &[x, y]) => m(x, y) == m(y, x),
        (law::ADD_ASSOCIATIVE, &[x, y, v]) => a(a(x, y), v) == a(x, a(y, v)),
        (law::MUL_ASSOCIATIVE, &[x, y, v]) => m(m(x, y), v) == m(x, m(y, v)),
        (law::DISTRIBUTIVE, &[x, y, v]) => {
            m(x, a(y, v)) == a(m(x, y), m(x, v)) && m(a(y, v), x) == a(m(y, x), m(v, x))
        }
        _ => panic!("unexpected witness shape {law_name} {w:?}"),
    }
}

/// Single-cell corruptions of gallery tables, in a fixed order.
fn corruptions() -> impl Iterator<Item = (String, RawSemiring)> {
    gallery::gallery().into_iter().flat_map(|s| {
        let raw = s.to_raw();
        let n = raw.size;
        let name = s.name().to_string();
        (0..2).flat_map(move |t| {
            let raw = raw.clone();
            let name = name.clone();
            (0..n * n * n).filter_map(move |k| {
                let (x, y, v) = (k / (n * n), (k / n) % n, k % n);
                let mut bad = raw.clone();
                let table = if t == 0 { &mut bad.add } else { &mut bad.mul };
                if table[x][y] == v {
                    return None;
                }
                table[x][y] = v;
                let op = if t == 0 { "+" } else { "·" };
                Some((format!("{name}: {x}{op}{y} := {v}"), bad))
            })
        })
    })
}

fn ac1() -> Outcome {
    let all = gallery::gallery();
    ensure(all.len() >= 15, || format!("gallery has {} members", all.len()))?;
    for s in &all {
        validate_semiring(&s.to_raw()).map_err(|e| format!("{}: {e}", s.name()))?;
    }
    let mut caught = Vec::new();
    for wanted in law::ALL {
        let (label, raw, witness) = corruptions()
            .find_map(|(label, raw)| match validate_semiring(&raw) {
                Err(Error::AxiomViolation { violations }) => violations
                    .into_iter()
                    .find(|v| v.law == wanted)
                    .map(|v| (label, raw, v.witness)),
                _ => None,
            })
            .ok_or_else(|| format!("no corruption breaks {wanted}"))?;
        ensure(!holds(&raw, wanted, &witness), || {
            format!("{label}: witness {witness:?} does not break {wanted}")
        })?;
        caught.push(label);
    }
    Ok(format!(
        "{} gallery members valid, {} corrupted variants rejected with genuine witnesses",
        all.len(),
        caught.len()
    ))
}

fn ideals_by_scan(s: &FiniteSemiring) -> Vec<ElementSet> {
    let n = s.size();
    (0u64..1 << n)
        .map(ElementSet::from_bits)
        .filter(|&i| {
            i.contains(s.zero())
                && i.iter().all(|a| {
                    i.iter().all(|b| i.contains(s.add(a, b)))
                        && s.elements().all(|r| i.contains(s.mul(r, a)))
                })
        })
        .collect()
}

fn ac2() -> Outcome {
    let mut count = 0;
    for s in gallery::gallery().into_iter().filter(|s| s.size() <= 5) {
        let got: Vec<ElementSet> = enumerate_ideals(&s, 9)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|i| i.members())
            .collect();
        let mut expected = ideals_by_scan(&s);
        let mut sorted = got.clone();
        sorted.sort();
        expected.sort();
        ensure(sorted == expected, || format!("{} disagrees with the subset scan", s.name()))?;
        count += 1;
    }
    Ok(format!("{count} semirings of size <= 5 match the subset scan"))
}

fn ac3() -> Outcome {
    let n = propositions(&[
        "ideal-arith",
        "ideal-lattice",
        "ideal-semiring",
        "colon-laws",
        "radical-laws",
        "cancellation",
        "cancelable-principal",
        "infinite-distributivity",
    ])?;
    ensure(n >= 10_000, || format!("only {n} instances"))?;
    Ok(format!("{n} instances, 0 failures"))
}

fn ac4() -> Outcome {
    let n = propositions(&["krull-radical", "maxisprime"])?;
    let mut direct = 0;
    for s in gallery::gallery() {
        for i in s.ideals() {
            let meet = s
                .v_of(i)
                .map_err(|e| e.to_string())?
                .iter()
                .fold(s.all(), |acc, p| acc.intersection(p.members()));
            ensure(s.radical(i).map_err(|e| e.to_string())?.members() == meet, || {
                format!("{}: radical of {} differs", s.name(), s.format_ideal(i))
            })?;
            direct += 1;
        }
        for w in s.mc_sets_up_to(4).iter().filter(|w| !w.contains(s.zero())) {
            for p in s.maximal_disjoint_ideals(w).map_err(|e| e.to_string())? {
                let prime = p.is_proper()
                    && s.elements().all(|a| {
                        s.elements()
                            .all(|b| !p.contains(s.mul(a, b)) || p.contains(a) || p.contains(b))
                    });
                ensure(prime, || format!("{}: {} not prime", s.name(), s.format_ideal(&p)))?;
                direct += 1;
            }
        }
    }
    Ok(format!("{n} instances from checks, {direct} direct"))
}

fn ac5() -> Outcome {
    let n = propositions(&["units-maximal", "local-criterion", "comaximal", "zariski"])?;
    for s in gallery::gallery() {
        let covered = s
            .spectrum()
            .maximals()
            .iter()
            .fold(ElementSet::default(), |acc, m| acc.union(m.members()));
        ensure(s.units() == s.all().difference(covered), || {
            format!("{}: units differ from S minus the maximals", s.name())
        })?;
        let nonunits = s.all().difference(s.units());
        ensure(s.is_local() == s.is_ideal_set(nonunits), || {
            format!("{}: locality disagrees with the nonunit criterion", s.name())
        })?;
    }
    Ok(format!("{n} instances, 0 failures"))
}

fn ac6() -> Outcome {
    let n = propositions(&["hom-contraction", "hom-extension", "hom-ec-ce"])?;
    let l3 = Arc::new(gallery::chain(3));
    let b = Arc::new(gallery::boolean());
    let map = SemiringHom::parse_map(&l3, &b, "0:0,s:1,1:1").map_err(|e| e.to_string())?;
    let gamma = validate_hom(&l3, &b, map).map_err(|e| e.to_string())?;
    ensure(gamma.kernel() == l3.zero_ideal(), || "kernel of γ is not (0)".into())?;
    ensure(!gamma.is_injective(), || "γ is injective".into())?;
    Ok(format!("{n} instances; γ: L3 -> B has kernel (0) and is not injective"))
}

fn ac7() -> Outcome {
    let n = propositions(&[
        "fraction-equivalence",
        "localized-ideals",
        "extended-ideals",
        "prime-correspondence",
        "local-at-prime",
    ])?;
    for s in gallery::gallery() {
        let s = Arc::new(s);
        for p in s.spectrum().primes() {
            let loc = localize_at_prime(&s, p).map_err(|e| e.to_string())?;
            let expected = loc.localize_ideal(p).map_err(|e| e.to_string())?;
            ensure(loc.quotient().local_ideal().ok().flatten() == Some(expected), || {
                format!("{} at {}: not local with maximal ideal PS_P", s.name(), s.format_ideal(p))
            })?;
        }
    }
    Ok(format!("{n} instances, 0 failures"))
}

fn ac8() -> Outcome {
    let n = propositions(&["semimodule-localization", "annihilator-ideal", "local-global-zero"])?;
    Ok(format!("{n} instances, 0 failures"))
}

fn ac9() -> Outcome {
    let n = propositions(&[
        "irreducible-decomposition",
        "subtractive-irreducible-primary",
        "primary-decomposition",
        "minimal-decomposition",
        "minimal-primes",
    ])?;
    let bb = gallery::by_name("BxB").map_err(|e| e.to_string())?;
    let named = |names: &[&str]| -> ElementSet {
        names.iter().map(|x| bb.element_by_name(x).unwrap()).collect()
    };
    let mut expected = vec![named(&["(0,0)", "(0,1)"]), named(&["(0,0)", "(1,0)"])];
    expected.sort();
    let d = bb.primary_decomposition(&bb.zero_ideal()).map_err(|e| e.to_string())?;
    let got: Vec<ElementSet> = d.components.iter().map(|q| q.members()).collect();
    ensure(got == expected, || format!("BxB: (0) decomposes as {got:?}"))?;
    ensure(d.components.iter().all(|q| bb.is_prime(q).unwrap_or(false)), || {
        "BxB: components are not prime".into()
    })?;
    Ok(format!("{n} instances; (0) in BxB = {{0}}xB ∩ Bx{{0}}"))
}

fn ac10() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_semiring-ideals"))
        .args(["--json", "check", "gallery:all"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("exit status {}", out.status))?;
    let reports: Vec<Value> = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let mut ids = 0;
    for r in &reports {
        for p in r["propositions"].as_array().ok_or("no propositions")? {
            ensure(p["instances"].as_u64().unwrap_or(0) > 0, || {
                format!("{} on {}: no instances", p["id"], r["semiring"])
            })?;
            ids += 1;
        }
    }
    Ok(format!("{} semirings, {ids} proposition reports, all with instances", reports.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("AC1 axiom validation", ac1, 1),
        ("AC2 ideal lattice oracle", ac2, 10),
        ("AC3 ideal calculus", ac3, 30),
        ("AC4 Krull theorems", ac4, 5),
        ("AC5 units, locality, comaximality, Zariski", ac5, 5),
        ("AC6 contraction and extension", ac6, 5),
        ("AC7 localization", ac7, 60),
        ("AC8 semimodules", ac8, 10),
        ("AC9 decomposition", ac9, 10),
        ("AC10 check gallery:all", ac10, 120),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|msg| {
            if elapsed > Duration::from_secs(budget) {
                Err(format!("{msg}; took {elapsed:.2?}, budget {budget} s"))
            } else {
                Ok(msg)
            }
        });
        match outcome {
            Ok(msg) => println!("[PASS] {name} ({elapsed:.2?}): {msg}"),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] {name} ({elapsed:.2?}): {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
