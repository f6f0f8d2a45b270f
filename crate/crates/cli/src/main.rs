//! `climb`: generate landscapes, run ascents, verify and analyse.
//!
//! Exit codes: 0 success, 1 I/O or other failure, 2 invalid input, 3 tie
//! under the fail-on-tie policy, 4 step budget exhausted, 5 a verified
//! property does not hold.

mod analyze;
mod report;
mod run;
mod source;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use climb_core::Execution;

use report::Format;
use source::{GenParams, Generator};

pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_TIE: u8 = 3;
pub const EXIT_BUDGET: u8 = 4;
pub const EXIT_ASSERTION: u8 = 5;

#[derive(Parser, Debug)]
#[command(name = "climb", version, about = "Hard landscapes for steepest-ascent local search")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,

    /// Worker threads for exhaustive sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Run sweeps on the calling thread only.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write an instance document.
    Gen {
        #[arg(value_enum)]
        kind: Generator,
        #[command(flatten)]
        params: GenParams,
        /// Output path (default: stdout, with the summary on stderr).
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Run a local search and write its trace.
    Run(run::RunArgs),
    /// Check structural properties and exit 5 if any fails.
    Verify(verify::VerifyArgs),
    /// Emit analysis tables.
    Analyze(analyze::AnalyzeArgs),
}

fn exit_code(err: &anyhow::Error) -> u8 {
    use climb_core::Error;
    match err.downcast_ref::<Error>() {
        Some(Error::Tie { .. }) => EXIT_TIE,
        Some(Error::Io(_)) => EXIT_FAILURE,
        Some(_) => EXIT_INVALID,
        None if err.downcast_ref::<std::io::Error>().is_some() => EXIT_FAILURE,
        None => EXIT_INVALID,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn dispatch(cli: &Cli) -> Result<u8> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .context("configuring the thread pool")?;
    }
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match &cli.command {
        Command::Gen { kind, params, output } => {
            let loaded = source::generate(*kind, params)?;
            let doc = loaded.to_document()?;
            let summary = loaded.describe();
            match output {
                Some(path) => {
                    std::fs::write(path, doc).with_context(|| format!("writing {}", path.display()))?;
                    report::write_pairs(&mut out, &summary, cli.format)?;
                }
                None => {
                    out.write_all(doc.as_bytes())?;
                    report::write_pairs(&mut std::io::stderr(), &summary, cli.format)?;
                }
            }
            Ok(0)
        }
        Command::Run(args) => run::run(args, cli.format, &mut out),
        Command::Verify(args) => {
            let report = verify::run(args, exec)?;
            report.write(&mut out, cli.format)?;
            Ok(if report.passed { 0 } else { EXIT_ASSERTION })
        }
        Command::Analyze(args) => analyze::run(args, cli.format, exec, &mut out),
    }
}
