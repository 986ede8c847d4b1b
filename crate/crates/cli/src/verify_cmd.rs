//! The `verify` subcommand: recompute every invariant through independent
//! routes over a grid and compare.
//!
//! The expected values here are restated from first principles rather than
//! imported from the library — the duplication is deliberate, so that a
//! defect in the library formulas cannot agree with itself.

use std::num::NonZeroU32;

use anyhow::{bail, Result};
use serde::Serialize;

use coincide_core::{
    dold_index_components, fibre_intersection_count, involution_fixed_points, is_loose,
    klein_r_from_roots, mcc, minimal_representative_diagram, nielsen_number, nielsen_sharp,
    omega_class, orbit_enumerate, recover_pair_invariants, reidemeister_count,
    section_intersection_count, BundleSpace, Cardinality, FiberMapClass, MapPair, Rat,
};

use crate::{VerifyArgs, DISAGREEMENT};

use BundleSpace::{Klein, Torus};

/// A deliberately corrupted route, to demonstrate the harness catches
/// disagreements.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Fault {
    /// Report the minimal coincidence count one too high.
    NielsenOffByOne,
    /// Flip the parity component of the self-map index.
    ParityFlip,
}

const FAULT_NAMES: [(&str, Fault); 2] = [
    ("nielsen-off-by-one", Fault::NielsenOffByOne),
    ("parity-flip", Fault::ParityFlip),
];

#[derive(Serialize)]
struct CheckResult {
    name: &'static str,
    cells: u64,
    passed: bool,
    /// First few disagreeing cells, empty when passed.
    failures: Vec<String>,
}

struct Checker {
    results: Vec<CheckResult>,
}

impl Checker {
    fn new() -> Self {
        Checker {
            results: Vec::new(),
        }
    }

    fn check(
        &mut self,
        name: &'static str,
        cells: impl Iterator<Item = Option<String>>,
    ) {
        let mut count = 0u64;
        let mut failures = Vec::new();
        for outcome in cells {
            count += 1;
            if let Some(description) = outcome {
                if failures.len() < 5 {
                    failures.push(description);
                }
            }
        }
        self.results.push(CheckResult {
            name,
            cells: count,
            passed: failures.is_empty(),
            failures,
        });
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Minimal coincidence count, restated from first principles.
fn expected_count(p: MapPair) -> u64 {
    let q = p.q().unsigned_abs();
    let r = p.r();
    match p.codomain() {
        Torus => gcd(q, r.unsigned_abs()),
        Klein => {
            if q == 0 {
                u64::from(r == 0)
            } else if q % 2 == 0 && r == 1 {
                q / 2
            } else {
                q / 2 + 1
            }
        }
    }
}

/// Class count, restated; `None` meaning infinite.
fn expected_class_count(p: MapPair) -> Option<u64> {
    let q = p.q().unsigned_abs();
    match p.codomain() {
        Torus => (q != 0 || p.r() != 0).then(|| gcd(q, p.r().unsigned_abs())),
        Klein => (q != 0).then(|| expected_count(p)),
    }
}

fn expected_loose(p: MapPair) -> bool {
    match p.codomain() {
        Torus => p.q() == 0 && p.r() == 0,
        Klein => p.q() == 0 && p.r() != 0,
    }
}

/// Every realizable pair class in the sweep.
fn grid(qmax: i64, rmax: i64) -> Vec<MapPair> {
    let combos = [(Torus, Torus), (Klein, Klein), (Klein, Torus), (Torus, Klein)];
    let mut out = Vec::new();
    for (domain, codomain) in combos {
        let qs: Vec<i64> = if domain == codomain {
            (-qmax..=qmax).collect()
        } else {
            vec![0]
        };
        let rs: Vec<i64> = match codomain {
            Torus => (-rmax..=rmax).collect(),
            Klein => vec![0, 1],
        };
        for &q in &qs {
            for &r in &rs {
                out.push(MapPair::from_invariants(domain, codomain, q, r).unwrap());
            }
        }
    }
    out
}

pub fn run(args: VerifyArgs) -> Result<u8> {
    let fault = match &args.inject_fault {
        None => None,
        Some(name) => match FAULT_NAMES.iter().find(|(n, _)| n == name) {
            Some((_, fault)) => Some(*fault),
            None => bail!(
                "unknown fault {name:?}; known faults: {}",
                FAULT_NAMES
                    .iter()
                    .map(|(n, _)| *n)
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        },
    };
    if args.qmax < 0 || args.rmax < 0 {
        bail!("qmax and rmax must be non-negative");
    }

    let pairs = grid(args.qmax, args.rmax);
    let window = args.window;
    let mut checker = Checker::new();

    run_checks(&mut checker, &pairs, args.qmax, args.rmax, window, fault);

    let all_passed = checker.results.iter().all(|r| r.passed);
    if args.json {
        crate::emit(&format!(
            "{}\n",
            serde_json::to_string_pretty(&checker.results)?
        ));
    } else {
        use std::fmt::Write;
        let mut out = String::new();
        for result in &checker.results {
            if result.passed {
                let _ = writeln!(out, "verify: {}: OK ({} cells)", result.name, result.cells);
            } else {
                let _ = writeln!(
                    out,
                    "verify: {}: FAIL ({} cells, first disagreements: {})",
                    result.name,
                    result.cells,
                    result.failures.join("; ")
                );
            }
        }
        crate::emit(&out);
    }
    if all_passed {
        Ok(0)
    } else {
        eprintln!("error: computation routes disagree");
        Ok(DISAGREEMENT)
    }
}

fn run_checks(
    checker: &mut Checker,
    pairs: &[MapPair],
    qmax: i64,
    rmax: i64,
    window: NonZeroU32,
    fault: Option<Fault>,
) {
    checker.check(
        "closed form vs orbit enumeration",
        pairs.iter().map(|&p| {
            let closed = reidemeister_count(p);
            let enumerated = orbit_enumerate(p, window).cardinality();
            (closed != enumerated).then(|| format!("{p}: {closed} vs {enumerated}"))
        }),
    );

    checker.check(
        "reflection-orbit identity",
        pairs
            .iter()
            .filter(|p| (p.domain(), p.codomain()) == (Klein, Klein) && p.q() != 0)
            .map(|&p| {
                let fixed = involution_fixed_points(p.q(), p.first().r(), p.second().r())
                    .expect("nonzero degree")
                    .fixed_count();
                let identity = Cardinality::Finite((p.q().unsigned_abs() + fixed) / 2);
                let closed = reidemeister_count(p);
                (closed != identity).then(|| format!("{p}: {closed} vs {identity}"))
            }),
    );

    checker.check(
        "counting formulas and realization",
        pairs.iter().map(|&p| {
            let expected = expected_count(p);
            let mut n = nielsen_number(p);
            if fault == Some(Fault::NielsenOffByOne) {
                n += 1;
            }
            if n != expected || nielsen_sharp(p) != expected || mcc(p) != expected {
                return Some(format!(
                    "{p}: N {n}, N# {}, MCC {} vs {expected}",
                    nielsen_sharp(p),
                    mcc(p)
                ));
            }
            let class_count = expected_class_count(p);
            let closed = reidemeister_count(p);
            match class_count {
                Some(count) => {
                    if closed != Cardinality::Finite(count) || expected != count {
                        return Some(format!("{p}: #R {closed} vs {count}"));
                    }
                }
                None => {
                    if closed != Cardinality::Infinite {
                        return Some(format!("{p}: #R {closed} vs inf"));
                    }
                }
            }
            (is_loose(p) != expected_loose(p)).then(|| format!("{p}: looseness"))
        }),
    );

    checker.check(
        "minimal diagram circle count",
        pairs.iter().map(|&p| {
            let d = minimal_representative_diagram(p);
            let circles = d.circles().len() as u64;
            let expected = expected_count(p);
            if circles != expected {
                return Some(format!("{p}: {circles} circles vs {expected}"));
            }
            if p.q() != 0 {
                let total: u64 = d.wrap_multiset().iter().sum();
                if total != p.q().unsigned_abs() {
                    return Some(format!("{p}: wrap sum {total} vs {}", p.q().unsigned_abs()));
                }
            }
            None
        }),
    );

    checker.check(
        "bordism components invert and detect looseness",
        pairs.iter().map(|&p| {
            let class = omega_class(p);
            match recover_pair_invariants(class) {
                Ok(invariants) => {
                    if invariants != (p.q(), p.r()) {
                        return Some(format!("{p}: recovered {invariants:?}"));
                    }
                }
                Err(err) => return Some(format!("{p}: {err}")),
            }
            (class.is_zero() != expected_loose(p)).then(|| format!("{p}: zero-class mismatch"))
        }),
    );

    checker.check(
        "geometric degree and section counts",
        pairs.iter().map(|&p| {
            let q = p.q();
            match p.codomain() {
                Torus => {
                    let d = minimal_representative_diagram(p);
                    match fibre_intersection_count(&d) {
                        Ok(count) if count == q.unsigned_abs() => {}
                        Ok(count) => {
                            return Some(format!("{p}: fibre count {count} vs {}", q.abs()))
                        }
                        Err(err) => return Some(format!("{p}: {err}")),
                    }
                    // Generic angle: reduced denominator 2|q|+1 exceeds every
                    // root denominator.
                    let alpha = if q != 0 {
                        Rat::new(q.abs(), 2 * q.abs() + 1)
                    } else {
                        Rat::new(1, 2)
                    };
                    match section_intersection_count(&d, alpha) {
                        Ok(count) if count == p.r().unsigned_abs() => None,
                        Ok(count) => {
                            Some(format!("{p}: section count {count} vs {}", p.r().abs()))
                        }
                        Err(err) => Some(format!("{p}: {err}")),
                    }
                }
                Klein => {
                    if q == 0 {
                        return None;
                    }
                    match klein_r_from_roots(p) {
                        Ok(parity) if i64::from(parity) == p.r() => None,
                        Ok(parity) => Some(format!("{p}: root phase {parity} vs {}", p.r())),
                        Err(err) => Some(format!("{p}: {err}")),
                    }
                }
            }
        }),
    );

    let self_classes: Vec<FiberMapClass> = [Torus, Klein]
        .into_iter()
        .flat_map(|space| {
            let rs: Vec<i64> = match space {
                Torus => (-rmax..=rmax).collect(),
                Klein => vec![0, 1],
            };
            (-qmax..=qmax).flat_map(move |q| {
                rs.clone()
                    .into_iter()
                    .map(move |r| FiberMapClass::new(space, space, q, r).unwrap())
            })
        })
        .collect();
    checker.check(
        "self-map index components",
        self_classes.iter().map(|&f| {
            let components = match dold_index_components(f) {
                Ok(components) => components,
                Err(err) => return Some(format!("{f}: {err}")),
            };
            if components.first != 1 - f.q() {
                return Some(format!("{f}: first {} vs {}", components.first, 1 - f.q()));
            }
            let root_pair = MapPair::new(FiberMapClass::identity(f.domain()), f)
                .expect("same spaces");
            let mut expected_parity = (expected_count(root_pair) % 2) as u8;
            if fault == Some(Fault::ParityFlip) {
                expected_parity ^= 1;
            }
            (components.second != expected_parity)
                .then(|| format!("{f}: parity {} vs {expected_parity}", components.second))
        }),
    );
}
