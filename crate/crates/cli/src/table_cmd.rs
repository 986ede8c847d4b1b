//! The `table` subcommand: sweep a grid of classes for one space
//! combination.

use anyhow::{bail, Result};
use serde::Serialize;

use coincide_core::{full_report, omega_class, BundleSpace, Cardinality, Component, MapPair};

use crate::report::CountValue;
use crate::TableArgs;

/// Hard ceiling on the number of rows; bigger sweeps belong in a file, not a
/// terminal.
const MAX_CELLS: i64 = 10_000;

#[derive(Serialize)]
struct Row {
    q: i64,
    r: i64,
    reidemeister: CountValue,
    nielsen: u64,
    mcc: u64,
    loose: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    c1: Option<i64>,
    c2: i64,
    c3: u8,
}

fn parse_combo(text: &str) -> Result<(BundleSpace, BundleSpace)> {
    let upper = text.trim().to_ascii_uppercase();
    let mut chars = upper.chars();
    let (Some(a), Some(b), None) = (chars.next(), chars.next(), chars.next()) else {
        bail!("combo must be two letters like TT, KK, KT, or TK, got {text:?}");
    };
    let space = |c: char| -> Result<BundleSpace> {
        match c {
            'T' => Ok(BundleSpace::Torus),
            'K' => Ok(BundleSpace::Klein),
            other => bail!("unknown space {other:?}; use T or K"),
        }
    };
    Ok((space(a)?, space(b)?))
}

pub fn run(args: TableArgs) -> Result<u8> {
    let (domain, codomain) = parse_combo(&args.combo)?;

    let (qmin, qmax) = if domain == codomain {
        (args.qmin.unwrap_or(-args.qmax), args.qmax)
    } else {
        // Mixed combinations only realize fibre degree zero.
        (0, 0)
    };
    let (rmin, rmax) = match codomain {
        BundleSpace::Torus => (args.rmin.unwrap_or(-args.rmax), args.rmax),
        BundleSpace::Klein => (0, 1),
    };
    if qmin > qmax || rmin > rmax {
        bail!("empty sweep: q in {qmin}..={qmax}, r in {rmin}..={rmax}");
    }
    let cells = (qmax - qmin + 1) * (rmax - rmin + 1);
    if cells > MAX_CELLS {
        bail!("sweep has {cells} cells, above the ceiling of {MAX_CELLS}");
    }

    let mut rows = Vec::with_capacity(cells as usize);
    for q in qmin..=qmax {
        for r in rmin..=rmax {
            let pair = MapPair::from_invariants(domain, codomain, q, r)
                .expect("grid invariants are realizable");
            let report = full_report(pair);
            let class = omega_class(pair);
            rows.push(Row {
                q,
                r,
                reidemeister: CountValue(report.reidemeister),
                nielsen: report.nielsen,
                mcc: report.mcc,
                loose: report.loose,
                c1: match class.c1() {
                    Component::Integer(n) => Some(n),
                    _ => None,
                },
                c2: match class.c2() {
                    Component::Integer(n) => n,
                    Component::Residue(p) => i64::from(p),
                    Component::Trivial => 0,
                },
                c3: match class.c3() {
                    Component::Residue(p) => p,
                    _ => 0,
                },
            });
        }
    }

    if args.json {
        crate::emit(&format!("{}\n", serde_json::to_string_pretty(&rows)?));
        return Ok(0);
    }

    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# {domain} -> {codomain}, q in {qmin}..={qmax}, r in {rmin}..={rmax}"
    );
    let _ = writeln!(
        out,
        "{:>6} {:>6} {:>6} {:>6} {:>6} {:>6} {:>6} {:>4} {:>4}",
        "q", "r", "#R", "N", "MCC", "loose", "c1", "c2", "c3"
    );
    for row in &rows {
        let _ = writeln!(
            out,
            "{:>6} {:>6} {:>6} {:>6} {:>6} {:>6} {:>6} {:>4} {:>4}",
            row.q,
            row.r,
            match row.reidemeister.0 {
                Cardinality::Finite(n) => n.to_string(),
                Cardinality::Infinite => "inf".to_string(),
            },
            row.nielsen,
            row.mcc,
            if row.loose { "yes" } else { "no" },
            row.c1.map_or_else(|| "-".to_string(), |n| n.to_string()),
            row.c2,
            row.c3,
        );
    }
    crate::emit(&out);
    Ok(0)
}
