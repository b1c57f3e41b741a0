//! `omclab`: circuits, OMC polytopes, the cocircuit family of complete
//! graphs and its symmetric-group action, from the command line.
//!
//! Exit codes: 0 success, 1 other errors, 2 unreadable or malformed input,
//! 3 a size guard refused the request, 4 an oracle or axiom check failed.

mod commands;
mod input;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use commands::family::FamilyQuery;
use commands::polytope::PolytopeQuery;
use input::Input;
use report::{CliResult, RunReport};

#[derive(Parser, Debug)]
#[command(name = "omclab", version, about = "Exact oriented matroid circuit polytopes")]
struct Cli {
    /// Print the full report as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Cross-check results against brute-force oracles; exit 4 on mismatch.
    #[arg(long, global = true)]
    verify: bool,

    /// Add wall-clock time to the report (makes output run-dependent).
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List circuits (or cocircuits) of a matrix or digraph file.
    Circuits {
        file: PathBuf,
        /// Cocircuits instead of circuits.
        #[arg(long)]
        dual: bool,
    },
    /// Compute with the OMC polytope of a matrix or digraph, or a polytope file.
    Polytope {
        file: PathBuf,
        #[arg(value_enum)]
        query: PolytopeQuery,
        /// Use the cocircuit polytope.
        #[arg(long)]
        dual: bool,
        /// Dilation factor for `count`.
        #[arg(long, default_value_t = 1)]
        t: u64,
    },
    /// Closed forms for the cocircuit polytope of K_n.
    Family {
        n: usize,
        #[arg(value_enum)]
        query: FamilyQuery,
    },
    /// Fixed polytopes and H*-series under the S_n action.
    Equivariant {
        n: usize,
        /// A permutation in cycle notation, e.g. "(1 2)(3 4)", or one-line
        /// notation "2 1 4 3". Defaults to the identity.
        sigma: Option<String>,
        /// One row per cycle type.
        #[arg(long, conflicts_with = "sigma")]
        all: bool,
    },
    /// Re-run the worked examples and tables on the bundled fixtures.
    Reproduce,
}

fn dispatch(cli: &Cli) -> CliResult<RunReport> {
    match &cli.command {
        Command::Circuits { file, dual } => commands::circuits::run(&Input::load(file)?, *dual, cli.verify),
        Command::Polytope { file, query, dual, t } => {
            commands::polytope::run(&Input::load(file)?, *dual, *query, *t, cli.verify)
        }
        Command::Family { n, query } => commands::family::run(*n, *query, cli.verify),
        Command::Equivariant { n, sigma, all } => commands::equivariant::run(*n, sigma.as_deref(), *all, cli.verify),
        Command::Reproduce => commands::reproduce::run(),
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    match dispatch(&cli) {
        Ok(mut report) => {
            if cli.timing {
                report.elapsed_ms = Some(start.elapsed().as_millis());
            }
            if cli.json {
                emit(&(serde_json::to_string_pretty(&report.to_json()).expect("reports serialize") + "\n"));
            } else {
                emit(&report.render_text());
            }
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                eprintln!("omclab: {} check(s) failed", report.checks.iter().filter(|c| !c.passed).count());
                ExitCode::from(4)
            }
        }
        Err(failure) => {
            if cli.json {
                let body = serde_json::json!({ "error": { "kind": failure.kind(), "message": failure.message() } });
                emit(&(serde_json::to_string_pretty(&body).expect("errors serialize") + "\n"));
            }
            eprintln!("omclab: {}", failure.message());
            failure.exit_code()
        }
    }
}
