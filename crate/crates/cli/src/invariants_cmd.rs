//! The `invariants` subcommand: full reports with oracle cross-checks.

use anyhow::Result;

use crate::input::collect_pairs;
use crate::report::build_report;
use crate::{InvariantsArgs, DISAGREEMENT};

pub fn run(args: InvariantsArgs) -> Result<u8> {
    let pairs = collect_pairs(&args.input)?;
    let reports: Vec<_> = pairs
        .into_iter()
        .map(|pair| build_report(pair, args.window))
        .collect();

    let disagreement = reports.iter().any(|report| !report.oracle.all_agree());

    if args.json {
        crate::emit(&format!("{}\n", serde_json::to_string_pretty(&reports)?));
    } else {
        let mut out = String::new();
        for (index, report) in reports.iter().enumerate() {
            if index > 0 {
                out.push('\n');
            }
            report.render(&mut out);
        }
        crate::emit(&out);
    }

    if disagreement {
        eprintln!("error: computation routes disagree; see the oracle flags");
        return Ok(DISAGREEMENT);
    }
    Ok(0)
}
