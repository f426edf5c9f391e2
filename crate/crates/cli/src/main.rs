//! `semiring-ideals`: ideal theory of finite commutative semirings from the
//! command line.
//!
//! Exit status is 0 on success, 1 when a check or validation fails and 2 on
//! bad input.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use semiring_ideals::checks::{run_checks, Selection};
use semiring_ideals::io::{load_semiring, load_semirings, parse_semimodule_file};
use semiring_ideals::morphisms::split_top_level;
use semiring_ideals::{
    gallery, is_zero_locally, localize, localize_at_prime, validate_hom, Error, FiniteSemiring,
    Ideal, LocalizationResult, SemiringHom, DEFAULT_SIZE_CAP,
};

#[derive(Parser)]
#[command(name = "semiring-ideals", version, about = "Ideals of finite commutative semirings")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Largest semiring accepted as input.
    #[arg(long, global = true, default_value_t = DEFAULT_SIZE_CAP)]
    size_cap: usize,
    /// Shuffle the order in which MC-sets and homomorphisms are visited.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Irreducible,
    Primary,
}

#[derive(Subcommand)]
enum Command {
    /// Check the semiring axioms.
    Validate { semiring: String },
    /// List the built-in semirings, or print one as JSON.
    Gallery { name: Option<String> },
    /// All ideals.
    Ideals { semiring: String },
    /// Prime ideals.
    Spec { semiring: String },
    /// Maximal ideals.
    Max { semiring: String },
    /// Prime, maximal, primary, irreducible and subtractive flags of an ideal.
    Classify {
        semiring: String,
        #[arg(long)]
        ideal: String,
    },
    /// Primes containing an ideal.
    Vof {
        semiring: String,
        #[arg(long)]
        ideal: String,
    },
    Radical {
        semiring: String,
        #[arg(long)]
        ideal: String,
    },
    /// `[I:J]`.
    Colon {
        semiring: String,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        by: String,
    },
    /// Check that a map is a semiring homomorphism.
    HomCheck {
        source: String,
        target: String,
        /// Pairs `src:dst`, e.g. `0:0,s:1,1:1`.
        #[arg(long)]
        map: String,
    },
    /// Contract an ideal of the target along a homomorphism.
    Contract {
        source: String,
        target: String,
        #[arg(long)]
        map: String,
        #[arg(long)]
        ideal: String,
    },
    /// Extend an ideal of the source along a homomorphism.
    Extend {
        source: String,
        target: String,
        #[arg(long)]
        map: String,
        #[arg(long)]
        ideal: String,
    },
    /// Semiring of fractions with denominators in an MC-set.
    Localize {
        semiring: String,
        #[arg(long)]
        mcset: String,
    },
    /// Localization at the complement of a prime.
    LocalizeAt {
        semiring: String,
        #[arg(long)]
        prime: String,
    },
    Decompose {
        semiring: String,
        #[arg(long)]
        ideal: String,
        #[arg(long, value_enum, default_value_t = Kind::Primary)]
        kind: Kind,
        #[arg(long)]
        minimal: bool,
    },
    /// Validate a semimodule file and run the local-global zero test.
    ModuleCheck { module: PathBuf },
    /// Verify every proposition on a semiring or on `gallery:all`.
    Check {
        semiring: String,
        /// Comma-separated proposition ids.
        #[arg(long, default_value = "all")]
        only: String,
    },
}

enum Outcome {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn parse_ideal(s: &FiniteSemiring, gens: &str) -> Result<Ideal, Error> {
    let mut set = semiring_ideals::ElementSet::EMPTY;
    for token in split_top_level(gens) {
        set.insert(s.element_by_name(&token)?);
    }
    Ok(s.generate_ideal(set))
}

fn members(s: &FiniteSemiring, i: &Ideal) -> Value {
    json!(i.members().iter().map(|e| s.element_name(e)).collect::<Vec<_>>())
}

fn ideal_list(s: &FiniteSemiring, ideals: &[Ideal]) -> Value {
    json!(ideals.iter().map(|i| members(s, i)).collect::<Vec<_>>())
}

struct Out {
    json: bool,
}

impl Out {
    fn ideals(&self, s: &FiniteSemiring, key: &str, ideals: &[Ideal]) {
        if self.json {
            self.value(json!({ "semiring": s.name(), key: ideal_list(s, ideals) }));
        } else {
            for i in ideals {
                println!("{}", s.format_ideal(i));
            }
        }
    }

    fn value(&self, v: Value) {
        println!("{}", serde_json::to_string_pretty(&v).expect("json"));
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let out = Out { json: cli.json };
    let cap = cli.size_cap;
    let one = |r: &str| load_semiring(r, cap);
    match &cli.command {
        Command::Validate { semiring } => match load_semirings(semiring, cap) {
            Ok(all) => {
                for s in &all {
                    if out.json {
                        out.value(json!({ "semiring": s.name(), "valid": true, "size": s.size() }));
                    } else {
                        println!("{}: valid semiring with {} elements", s.name(), s.size());
                    }
                }
                Ok(Outcome::Ok)
            }
            Err(Error::AxiomViolation { violations }) => {
                if out.json {
                    let v: Vec<Value> = violations
                        .iter()
                        .map(|v| json!({ "law": v.law, "witness": v.witness }))
                        .collect();
                    out.value(json!({ "valid": false, "violations": v }));
                } else {
                    for v in &violations {
                        println!("violated: {} at {:?}", v.law, v.witness);
                    }
                }
                Ok(Outcome::Failed)
            }
            Err(e) => Err(e),
        },
        Command::Gallery { name } => {
            match name {
                Some(name) => {
                    let s = gallery::by_name(name)?;
                    println!("{}", semiring_ideals::io::semiring_to_json(&s));
                }
                None => {
                    let all = gallery::gallery();
                    if out.json {
                        let v: Vec<Value> = all
                            .iter()
                            .map(|s| json!({ "name": s.name(), "size": s.size() }))
                            .collect();
                        out.value(json!(v));
                    } else {
                        for s in &all {
                            println!("{:<6} {}", s.name(), s.size());
                        }
                    }
                }
            }
            Ok(Outcome::Ok)
        }
        Command::Ideals { semiring } => {
            let s = one(semiring)?;
            out.ideals(&s, "ideals", s.ideals().ideals());
            Ok(Outcome::Ok)
        }
        Command::Spec { semiring } => {
            let s = one(semiring)?;
            out.ideals(&s, "primes", s.spectrum().primes());
            Ok(Outcome::Ok)
        }
        Command::Max { semiring } => {
            let s = one(semiring)?;
            out.ideals(&s, "maximals", s.spectrum().maximals());
            Ok(Outcome::Ok)
        }
        Command::Classify { semiring, ideal } => {
            let s = one(semiring)?;
            let i = parse_ideal(&s, ideal)?;
            let flags = [
                ("proper", i.is_proper()),
                ("prime", s.is_prime(&i)?),
                ("maximal", s.is_maximal(&i)?),
                ("primary", s.is_primary(&i)?),
                ("irreducible", s.is_irreducible(&i)?),
                ("subtractive", s.is_subtractive(&i)?),
                ("cancellation", !i.is_zero() && s.is_cancellation(&i)?),
            ];
            if out.json {
                let mut v = json!({ "semiring": s.name(), "ideal": members(&s, &i) });
                for (k, f) in flags {
                    v[k] = json!(f);
                }
                out.value(v);
            } else {
                println!("ideal {}", s.format_ideal(&i));
                for (k, f) in flags {
                    println!("{k:<12} {f}");
                }
            }
            Ok(Outcome::Ok)
        }
        Command::Vof { semiring, ideal } => {
            let s = one(semiring)?;
            let i = parse_ideal(&s, ideal)?;
            out.ideals(&s, "primes", &s.v_of(&i)?);
            Ok(Outcome::Ok)
        }
        Command::Radical { semiring, ideal } => {
            let s = one(semiring)?;
            let i = parse_ideal(&s, ideal)?;
            out.ideals(&s, "radical", &[s.radical(&i)?]);
            Ok(Outcome::Ok)
        }
        Command::Colon { semiring, ideal, by } => {
            let s = one(semiring)?;
            let i = parse_ideal(&s, ideal)?;
            let j = parse_ideal(&s, by)?;
            out.ideals(&s, "colon", &[s.colon(&i, &j)?]);
            Ok(Outcome::Ok)
        }
        Command::HomCheck { source, target, map } => {
            let (src, dst) = (Arc::new(one(source)?), Arc::new(one(target)?));
            let parsed = SemiringHom::parse_map(&src, &dst, map)?;
            match validate_hom(&src, &dst, parsed) {
                Ok(f) => {
                    let kernel = f.kernel();
                    if out.json {
                        out.value(json!({
                            "homomorphism": true,
                            "kernel": members(&src, &kernel),
                            "injective": f.is_injective(),
                        }));
                    } else {
                        println!("homomorphism");
                        println!("kernel    {}", src.format_ideal(&kernel));
                        println!("injective {}", f.is_injective());
                    }
                    Ok(Outcome::Ok)
                }
                Err(Error::HomViolation { violations }) => {
                    if out.json {
                        let v: Vec<Value> = violations
                            .iter()
                            .map(|v| json!({ "law": v.law, "witness": v.witness }))
                            .collect();
                        out.value(json!({ "homomorphism": false, "violations": v }));
                    } else {
                        for v in &violations {
                            println!("violated: {} at {:?}", v.law, v.witness);
                        }
                    }
                    Ok(Outcome::Failed)
                }
                Err(e) => Err(e),
            }
        }
        Command::Contract {
            source,
            target,
            map,
            ideal,
        } => {
            let f = hom(one(source)?, one(target)?, map)?;
            let j = parse_ideal(f.target(), ideal)?;
            out.ideals(f.source(), "contraction", &[f.contract(&j)?]);
            Ok(Outcome::Ok)
        }
        Command::Extend {
            source,
            target,
            map,
            ideal,
        } => {
            let f = hom(one(source)?, one(target)?, map)?;
            let i = parse_ideal(f.source(), ideal)?;
            out.ideals(f.target(), "extension", &[f.extend(&i)?]);
            Ok(Outcome::Ok)
        }
        Command::Localize { semiring, mcset } => {
            let s = Arc::new(one(semiring)?);
            let mut set = semiring_ideals::ElementSet::EMPTY;
            for token in split_top_level(mcset) {
                set.insert(s.element_by_name(&token)?);
            }
            let loc = localize(&s, &s.mc_set(set)?)?;
            print_localization(&out, &loc);
            Ok(Outcome::Ok)
        }
        Command::LocalizeAt { semiring, prime } => {
            let s = Arc::new(one(semiring)?);
            let p = parse_ideal(&s, prime)?;
            let loc = localize_at_prime(&s, &p)?;
            print_localization(&out, &loc);
            Ok(Outcome::Ok)
        }
        Command::Decompose {
            semiring,
            ideal,
            kind,
            minimal,
        } => {
            let s = one(semiring)?;
            let i = parse_ideal(&s, ideal)?;
            let mut d = match kind {
                Kind::Irreducible => s.irreducible_decomposition(&i)?,
                Kind::Primary => s.primary_decomposition(&i)?,
            };
            if *minimal {
                d = s.minimize(&d)?;
            }
            let radicals: Vec<Ideal> = d
                .components
                .iter()
                .map(|q| s.radical(q))
                .collect::<Result<_, _>>()?;
            let minimal_primes = match kind {
                Kind::Primary => Some(s.minimal_primes(&i)?),
                Kind::Irreducible => s.minimal_primes(&i).ok(),
            };
            if out.json {
                out.value(json!({
                    "semiring": s.name(),
                    "ideal": members(&s, &i),
                    "components": ideal_list(&s, &d.components),
                    "radicals": ideal_list(&s, &radicals),
                    "minimal_primes": minimal_primes.as_ref().map(|m| ideal_list(&s, m)),
                    "minimal": d.minimal,
                    "repaired": d.repaired,
                }));
            } else {
                println!("ideal {}", s.format_ideal(&i));
                for (q, r) in d.components.iter().zip(&radicals) {
                    println!("component {}  radical {}", s.format_ideal(q), s.format_ideal(r));
                }
                if let Some(m) = minimal_primes {
                    for p in &m {
                        println!("minimal prime {}", s.format_ideal(p));
                    }
                }
            }
            Ok(Outcome::Ok)
        }
        Command::ModuleCheck { module } => {
            let m = parse_semimodule_file(module, cap)?;
            let report = is_zero_locally(&m)?;
            let annihilators: Vec<Ideal> = (0..m.size())
                .map(|x| m.annihilator(x))
                .collect::<Result<_, _>>()?;
            let ring = m.ring();
            if out.json {
                out.value(json!({
                    "ring": ring.name(),
                    "size": m.size(),
                    "annihilators": ideal_list(ring, &annihilators),
                    "module_is_zero": report.module_is_zero,
                    "zero_at_all_primes": report.zero_at_all_primes,
                    "zero_at_all_maximals": report.zero_at_all_maximals,
                }));
            } else {
                println!("valid semimodule with {} elements over {}", m.size(), ring.name());
                for (x, a) in annihilators.iter().enumerate() {
                    println!("Ann({}) = {}", m.element_name(x), ring.format_ideal(a));
                }
                println!(
                    "M = 0: {}, all M_p = 0: {}, all M_m = 0: {}",
                    report.module_is_zero, report.zero_at_all_primes, report.zero_at_all_maximals
                );
            }
            Ok(Outcome::Ok)
        }
        Command::Check { semiring, only } => {
            let selection = Selection::parse(only);
            let mut failed = false;
            let mut reports = Vec::new();
            for s in load_semirings(semiring, cap)? {
                let report = run_checks(&s, &selection, cli.seed)?;
                failed |= !report.passed();
                if !out.json {
                    let instances: u64 = report.propositions.iter().map(|p| p.instances).sum();
                    println!(
                        "{}: {} propositions, {} instances, {} failures, {} ms",
                        report.semiring,
                        report.propositions.len(),
                        instances,
                        report.failure_count(),
                        report.elapsed_ms
                    );
                    for p in report.propositions.iter().filter(|p| !p.failures.is_empty()) {
                        println!("  FAIL {} ({} instances)", p.id, p.instances);
                        for f in p.failures.iter().take(5) {
                            println!("    {f}");
                        }
                    }
                }
                reports.push(report);
            }
            if out.json {
                let v = serde_json::to_value(&reports).expect("report serializes");
                out.value(if reports.len() == 1 { v[0].clone() } else { v });
            }
            Ok(if failed { Outcome::Failed } else { Outcome::Ok })
        }
    }
}

fn hom(src: FiniteSemiring, dst: FiniteSemiring, map: &str) -> Result<SemiringHom, Error> {
    let (src, dst) = (Arc::new(src), Arc::new(dst));
    let parsed = SemiringHom::parse_map(&src, &dst, map)?;
    validate_hom(&src, &dst, parsed)
}

fn print_localization(out: &Out, loc: &LocalizationResult) {
    let s = loc.base();
    let q = loc.quotient();
    let classes: Vec<Value> = s
        .elements()
        .flat_map(|x| {
            loc.denominators().iter().map(move |&u| {
                json!({
                    "numerator": s.element_name(x),
                    "denominator": s.element_name(u),
                    "class": q.element_name(loc.class_of(x, u).expect("member")),
                })
            })
        })
        .collect();
    if out.json {
        out.value(json!({
            "semiring": serde_json::to_value(q.to_raw()).expect("tables"),
            "classes": classes,
            "gamma": s.elements().map(|x| q.element_name(loc.gamma().apply(x))).collect::<Vec<_>>(),
        }));
    } else {
        println!("{}", semiring_ideals::io::semiring_to_json(q));
        for x in s.elements() {
            for &u in loc.denominators() {
                let class = loc.class_of(x, u).expect("member");
                println!("{}/{} -> {}", s.element_name(x), s.element_name(u), q.element_name(class));
            }
        }
    }
}
