use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use climb_core::search::{first_improvement_ascent, steepest_ascent};
use climb_core::{Terminal, TieBreakPolicy};

use crate::report::{write_pairs, Format};
use crate::source::SourceArgs;
use crate::EXIT_BUDGET;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Policy {
    /// Steepest ascent; a tie between best moves is an error.
    Steepest,
    /// Steepest ascent taking the lowest (variable, value) among best moves.
    SteepestLowest,
    /// First improving move in a seeded random variable order.
    FirstImprovement,
}

#[derive(Args, Debug)]
pub struct RunArgs {
    #[command(flatten)]
    pub source: SourceArgs,

    /// Start state (default: all zeros). Symbol states are written with X_1
    /// rightmost, e.g. "0 0 0 1 1 1 1".
    #[arg(long)]
    pub start: Option<String>,

    #[arg(long, value_enum, default_value = "steepest")]
    pub policy: Policy,

    /// Required by `first-improvement`.
    #[arg(long)]
    pub seed: Option<u64>,

    #[arg(long)]
    pub max_steps: usize,

    /// Trace table path; `-` writes the table to stdout and the summary to
    /// stderr.
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

pub fn run(args: &RunArgs, format: Format, out: &mut impl Write) -> Result<u8> {
    let loaded = args.source.load()?;
    let landscape = loaded.landscape();
    let start = match &args.start {
        Some(text) => loaded.parse_state(text)?,
        None => vec![0; landscape.num_variables()],
    };
    let trace = match args.policy {
        Policy::Steepest => steepest_ascent(landscape, &start, TieBreakPolicy::FailOnTie, args.max_steps)?,
        Policy::SteepestLowest => steepest_ascent(landscape, &start, TieBreakPolicy::LowestIndex, args.max_steps)?,
        Policy::FirstImprovement => {
            let Some(seed) = args.seed else {
                bail!("--policy first-improvement needs --seed");
            };
            first_improvement_ascent(landscape, &start, seed, args.max_steps)?
        }
    };

    let mut summary = vec![
        ("kind".to_string(), loaded.kind().to_string()),
        ("steps".into(), trace.num_steps().to_string()),
        ("final_fitness".into(), trace.final_fitness().to_string()),
        ("terminal".into(), trace.terminal.as_str().to_string()),
        ("final_state".into(), loaded.format_state(trace.final_state())),
    ];
    if let Some(decoded) = loaded.decoded(trace.final_state()) {
        summary.push(("final_symbols".into(), decoded));
    }

    let format_state = |v: &[u8]| loaded.format_state(v);
    match &args.trace {
        Some(path) if path.as_os_str() == "-" => {
            trace.write_csv(&mut *out, format_state)?;
            write_pairs(&mut std::io::stderr(), &summary, format)?;
        }
        Some(path) => {
            let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
            let mut w = BufWriter::new(file);
            trace.write_csv(&mut w, format_state)?;
            w.flush()?;
            write_pairs(out, &summary, format)?;
        }
        None => write_pairs(out, &summary, format)?,
    }
    Ok(match trace.terminal {
        Terminal::LocalOptimum => 0,
        Terminal::BudgetExhausted => EXIT_BUDGET,
    })
}
