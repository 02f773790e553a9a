//! `taut` — enumerate support tau-tilting pairs of a bound quiver algebra,
//! label the Hasse quiver of torsion classes with bricks, and decide the
//! Boolean-lattice conditions.
//!
//! Exit codes: 0 when the pipeline ran (whatever the mathematical verdicts,
//! including inconclusive-by-bound), 2 for unreadable or malformed input,
//! 3 when the algebra cannot be built (e.g. not finite-dimensional),
//! 4 for internal invariant violations.

use clap::Parser;
use std::path::PathBuf;
use std::process::ExitCode;

use taut::run::{run_text, RunConfig};

/// Torsion-lattice analyzer for bound quiver algebras.
///
/// Reads a line-oriented description (field / vertex / arrow / relation /
/// bound directives; `relation a b` kills the path "first a, then b"),
/// enumerates all basic support tau-tilting pairs by mutation, and reports
/// the structure of the lattice of functorially finite torsion classes.
/// Runs are deterministic: no seeds, and identical output at any thread
/// count.
#[derive(Debug, Parser)]
#[command(name = "taut", version)]
struct Cli {
    /// Algebra description file.
    input: PathBuf,

    /// Write the brick-labeled Hasse quiver as a DOT digraph here
    /// (skipped, with a note, when enumeration hits a bound).
    #[arg(long, value_name = "PATH")]
    dot: Option<PathBuf>,

    /// Write the machine-readable JSON report here.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,

    /// Override the coefficient field: a prime, or 0 for the rationals.
    #[arg(long, value_name = "P")]
    field: Option<u64>,

    /// Stop enumerating after this many pairs (overrides `bound nodes`).
    #[arg(long, value_name = "K")]
    node_bound: Option<usize>,

    /// Stop when a module part exceeds this dimension (overrides `bound dim`).
    #[arg(long, value_name = "K")]
    dim_bound: Option<usize>,

    /// Insist on the brute-force torsion-class oracle: fail the
    /// cross-validation when no indecomposable classification is shipped
    /// for this quiver shape instead of skipping the comparison.
    #[arg(long)]
    oracle: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    let text = match std::fs::read_to_string(&cli.input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", cli.input.display());
            return ExitCode::from(2);
        }
    };

    let cfg = RunConfig {
        field_override: cli.field,
        node_bound: cli.node_bound,
        dim_bound: cli.dim_bound,
        force_oracle: cli.oracle,
    };

    let outcome = match run_text(&text, &cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {}: {e}", cli.input.display());
            return ExitCode::from(e.exit_code() as u8);
        }
    };

    print!("{}", outcome.report.human_summary());

    if let Some(path) = &cli.json {
        if let Err(e) = std::fs::write(path, outcome.report.to_json()) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if let Some(path) = &cli.dot {
        match &outcome.dot {
            Some(dot) => {
                if let Err(e) = std::fs::write(path, dot) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            None => {
                println!("note: enumeration incomplete, no DOT written to {}", path.display());
            }
        }
    }

    let t = &outcome.report.timings;
    eprintln!(
        "timings (ms): parse {} | build {} | enumerate {} | label {} | cross-validate {} | total {}",
        t.parse_ms, t.build_ms, t.enumerate_ms, t.label_ms, t.validate_ms, t.total_ms
    );
    ExitCode::SUCCESS
}
