//! `coincide` — exact coincidence invariants of fibre-preserving maps
//! between S¹-bundles over S¹.
//!
//! Subcommands: `invariants` (full report per map pair), `table` (sweep a
//! grid of classes), `verify` (cross-check every computation route against
//! independently restated formulas), `diagram` (the coincidence circles of
//! the affine representatives).
//!
//! Exit codes: 0 on success, 1 on input or usage errors, 2 when any
//! cross-validation disagrees.

mod diagram_cmd;
mod input;
mod invariants_cmd;
mod report;
mod table_cmd;
mod verify_cmd;

use std::io::Write;
use std::num::NonZeroU32;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

/// Exit status for a detected disagreement between computation routes.
pub(crate) const DISAGREEMENT: u8 = 2;

/// Write a finished block of output to stdout.  When the read end has gone
/// away (e.g. the output is piped into `head`), exit quietly instead of
/// panicking.
pub(crate) fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let outcome = out.write_all(text.as_bytes()).and_then(|()| out.flush());
    if let Err(err) = outcome {
        if err.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: writing to stdout: {err}");
        std::process::exit(1);
    }
}

#[derive(Parser)]
#[command(name = "coincide", version, about, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute all invariants of map pairs: class counts, minimal
    /// coincidence counts, bordism components, diagram, and oracle flags.
    Invariants(InvariantsArgs),
    /// Sweep a grid of classes for one space combination and print one row
    /// per class.
    Table(TableArgs),
    /// Recompute every invariant through independent routes over a grid and
    /// report one line per check.
    Verify(VerifyArgs),
    /// Print the coincidence circles of the affine representatives.
    Diagram(DiagramArgs),
}

/// Input selection shared by `invariants` and `diagram`.
#[derive(Args)]
struct InputArgs {
    /// Map classes: inline specs like "T T 3 5" (domain, codomain, fibre
    /// degree q, section number r), file paths, or "-" for stdin.  Files
    /// hold one spec per line ('#' comments) or a JSON array of objects
    /// {"domain", "codomain", "q", "r"}.  Without --root, specs are
    /// consumed in consecutive pairs.
    #[arg(value_name = "SPEC")]
    specs: Vec<String>,

    /// Pair each input class f with the positive constant section composite
    /// instead of consuming specs two at a time.
    #[arg(long)]
    root: bool,
}

#[derive(Args)]
struct InvariantsArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Emit a JSON array instead of human-readable blocks.
    #[arg(long)]
    json: bool,

    /// Half-width of the lift window used to list representatives of
    /// infinite class sets and to bound the orbit-enumeration oracle.
    #[arg(long, value_name = "N", default_value = "8")]
    window: NonZeroU32,
}

#[derive(Args)]
struct TableArgs {
    /// Space combination: TT, KK, KT, or TK (domain then codomain).
    #[arg(value_name = "COMBO")]
    combo: String,

    /// Largest fibre degree |q| in the sweep (ignored for mixed
    /// combinations, which only realize q = 0).
    #[arg(long, value_name = "N", default_value = "10")]
    qmax: i64,

    /// Smallest fibre degree (defaults to -qmax).
    #[arg(long, value_name = "N")]
    qmin: Option<i64>,

    /// Largest section number |r| (an orientable codomain; a non-orientable
    /// one only realizes r ∈ {0, 1}).
    #[arg(long, value_name = "N", default_value = "10")]
    rmax: i64,

    /// Smallest section number (defaults to -rmax).
    #[arg(long, value_name = "N")]
    rmin: Option<i64>,

    /// Emit a JSON array instead of an aligned text table.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest |q| in the verification grid.
    #[arg(long, value_name = "N", default_value = "50")]
    qmax: i64,

    /// Largest |r| in the verification grid (orientable codomains).
    #[arg(long, value_name = "N", default_value = "50")]
    rmax: i64,

    /// Half-width of the orbit-enumeration window.
    #[arg(long, value_name = "N", default_value = "500")]
    window: NonZeroU32,

    /// Emit a JSON array of check results.
    #[arg(long)]
    json: bool,

    /// Deliberately corrupt one computation route to demonstrate that the
    /// cross-checks catch disagreements.
    #[arg(long, value_name = "NAME", hide = true)]
    inject_fault: Option<String>,
}

#[derive(Args)]
struct DiagramArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Emit a JSON array instead of human-readable blocks.
    #[arg(long)]
    json: bool,

    /// Show the diagram of a coincidence-minimal deformation instead of the
    /// raw affine representatives (these differ only when the raw
    /// coincidence set is the whole space).
    #[arg(long)]
    minimal: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests land here too; those exit 0.
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Invariants(args) => invariants_cmd::run(args),
        Command::Table(args) => table_cmd::run(args),
        Command::Verify(args) => verify_cmd::run(args),
        Command::Diagram(args) => diagram_cmd::run(args),
    }
}
