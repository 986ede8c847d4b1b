//! The `diagram` subcommand: the coincidence circles of a pair.

use anyhow::Result;
use serde::Serialize;

use coincide_core::{diagram, minimal_representative_diagram, CoincidenceCircle};

use crate::input::collect_pairs;
use crate::report::{CircleOut, PairEcho};
use crate::DiagramArgs;

#[derive(Serialize)]
struct DiagramReport {
    pair: PairEcho,
    /// True when the raw representatives coincide everywhere; the circle
    /// list is then empty unless --minimal deforms them apart.
    degenerate: bool,
    circles: Vec<CircleOut>,
    wraps: Vec<u64>,
}

pub fn run(args: DiagramArgs) -> Result<u8> {
    let pairs = collect_pairs(&args.input)?;
    let mut reports = Vec::new();
    for pair in pairs {
        let d = if args.minimal {
            minimal_representative_diagram(pair)
        } else {
            diagram(pair)
        };
        reports.push((d.degenerate(), pair, d));
    }

    if args.json {
        let out: Vec<DiagramReport> = reports
            .iter()
            .map(|(degenerate, pair, d)| DiagramReport {
                pair: PairEcho::of(*pair),
                degenerate: *degenerate,
                circles: d.circles().iter().map(CircleOut::of).collect(),
                wraps: d.wrap_multiset(),
            })
            .collect();
        crate::emit(&format!("{}\n", serde_json::to_string_pretty(&out)?));
        return Ok(0);
    }

    use std::fmt::Write;
    let mut out = String::new();
    for (index, (degenerate, pair, d)) in reports.iter().enumerate() {
        if index > 0 {
            let _ = writeln!(out);
        }
        let _ = writeln!(out, "{pair}");
        if *degenerate {
            let _ = writeln!(
                out,
                "  the representatives coincide everywhere; rerun with --minimal \
                 for a coincidence-minimal deformation"
            );
            continue;
        }
        if d.circles().is_empty() {
            let _ = writeln!(out, "  no coincidences");
            continue;
        }
        for (n, circle) in d.circles().iter().enumerate() {
            match circle {
                CoincidenceCircle::Horizontal {
                    base_wrap,
                    root_cycle,
                } => {
                    let _ = writeln!(
                        out,
                        "  circle {}: wraps the base {} time(s), root indices {:?}",
                        n + 1,
                        base_wrap,
                        root_cycle
                    );
                }
                CoincidenceCircle::VerticalFibre { base_coordinate } => {
                    let _ = writeln!(
                        out,
                        "  circle {}: whole fibre at t = {}",
                        n + 1,
                        base_coordinate
                    );
                }
            }
        }
    }
    crate::emit(&out);
    Ok(0)
}
