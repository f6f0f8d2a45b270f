//! Plot-data tables. Text mode writes CSV (to `--output` or stdout) and
//! prints summary lines to stderr; JSON mode writes one object to stdout.

use std::fs::File;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Subcommand};
use climb_core::analysis::{
    degree_bound_report, gradient, local_optima_census, odd_entries_changed_below, origin_gradient_formula,
    peak_gradient_formula, winding_peak_pairs,
};
use climb_core::landscapes::{StepSchedule, WindingLandscape};
use climb_core::search::steepest_ascent;
use climb_core::{Execution, Fitness, Terminal, TieBreakPolicy};
use serde_json::json;

use crate::report::{write_pairs, Format};
use crate::source::SourceArgs;

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[command(subcommand)]
    pub kind: AnalyzeKind,

    /// Table path (default: stdout).
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum AnalyzeKind {
    /// Gradient of the winding landscape at the origin or a sub-cube peak,
    /// next to the predicted values.
    /// Columns: entry,gradient,predicted.
    Gradient {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value = "semismooth")]
        schedule: String,
        /// Level of the peak `0^{2(k-1)} 11 0^{2(n-k)}` (default: origin).
        #[arg(long)]
        peak: Option<usize>,
    },
    /// Flow-change degree bounds between the origin and each peak.
    /// Columns: k,differing,direct,chained,implied,odd_changed_below,required.
    DegreeBounds {
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value = "semismooth")]
        schedule: String,
    },
    /// Exhaustive local-maximum census.
    Census {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = 1 << 24)]
        max_states: u64,
    },
    /// Steepest-ascent path length from the origin of the winding
    /// landscape. Columns: n,steps,predicted.
    Scaling {
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long, default_value_t = 14)]
        max_n: usize,
        #[arg(long, default_value = "semismooth")]
        schedule: String,
    },
}

struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn write(&self, out: impl Write) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.header)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        w.flush()?;
        Ok(())
    }

    fn to_json(&self) -> serde_json::Value {
        self.rows
            .iter()
            .map(|r| {
                self.header
                    .iter()
                    .zip(r)
                    .map(|(h, v)| (h.to_string(), json!(v)))
                    .collect::<serde_json::Map<_, _>>()
            })
            .collect()
    }
}

fn winding(n: usize, schedule: &str) -> Result<WindingLandscape> {
    if n == 0 {
        bail!("--n must be at least 1");
    }
    Ok(WindingLandscape::new(StepSchedule::by_name(schedule, n)?))
}

pub fn run(args: &AnalyzeArgs, format: Format, exec: Execution, out: &mut impl Write) -> Result<u8> {
    let (table, summary) = match &args.kind {
        AnalyzeKind::Gradient { n, schedule, peak } => {
            let w = winding(*n, schedule)?;
            let (state, predicted) = match peak {
                None => (vec![0; 2 * n], origin_gradient_formula(w.schedule()).into_iter().map(Some).collect()),
                Some(k) if (1..=*n).contains(k) => (WindingLandscape::peak_state(*k, *n), peak_gradient_formula(&w, *k)),
                Some(k) => bail!("--peak {k} outside 1..={n}"),
            };
            let g = gradient(&w, &state)?;
            let rows = g
                .iter()
                .zip(&predicted)
                .enumerate()
                .map(|(i, (g, p)): (usize, (&Fitness, &Option<Fitness>))| {
                    vec![(i + 1).to_string(), g.to_string(), p.as_ref().map_or(String::new(), ToString::to_string)]
                })
                .collect();
            let matches = g.iter().zip(&predicted).all(|(g, p)| p.as_ref().is_none_or(|p| p == g));
            (
                Table {
                    header: vec!["entry", "gradient", "predicted"],
                    rows,
                },
                vec![("matches_prediction".to_string(), matches.to_string())],
            )
        }
        AnalyzeKind::DegreeBounds { n, schedule } => {
            let w = winding(*n, schedule)?;
            let report = degree_bound_report(&w, &winding_peak_pairs(*n))?;
            let mut rows = Vec::new();
            for (k, p) in (1..=*n).zip(&report.pairs) {
                let differing: Vec<String> = p.differing.iter().map(|v| (v + 1).to_string()).collect();
                rows.push(vec![
                    k.to_string(),
                    differing.join(" "),
                    p.direct.to_string(),
                    p.chained.to_string(),
                    p.implied().to_string(),
                    odd_entries_changed_below(&w, k)?.to_string(),
                    (k - 1).to_string(),
                ]);
            }
            let aggregate = report.aggregate().map_or("overlapping".into(), |a| a.to_string());
            (
                Table {
                    header: vec!["k", "differing", "direct", "chained", "implied", "odd_changed_below", "required"],
                    rows,
                },
                vec![
                    ("aggregate".to_string(), aggregate),
                    ("target".to_string(), ((n - 1) * n / 2).to_string()),
                ],
            )
        }
        AnalyzeKind::Census { source, max_states } => {
            let loaded = source.load()?;
            let c = local_optima_census(loaded.landscape(), *max_states, exec)?;
            let summary = vec![
                ("kind".to_string(), loaded.kind().to_string()),
                ("states".into(), c.states.to_string()),
                ("local_maxima".into(), c.local_maxima.to_string()),
                ("global_max".into(), c.global_max.to_string()),
                ("worst_local_max".into(), c.worst_local_max.to_string()),
            ];
            write_pairs(out, &summary, format)?;
            return Ok(0);
        }
        AnalyzeKind::Scaling { min_n, max_n, schedule } => {
            if *min_n == 0 || min_n > max_n {
                bail!("need 1 <= --min-n <= --max-n");
            }
            let sizes: Vec<usize> = (*min_n..=*max_n).collect();
            let rows = exec.map_slice(&sizes, |&n| -> Result<Vec<String>> {
                let w = winding(n, schedule)?;
                let budget = 1usize << (n + 2);
                let trace = steepest_ascent(&w, &vec![0; 2 * n], TieBreakPolicy::FailOnTie, budget)?;
                if trace.terminal != Terminal::LocalOptimum {
                    bail!("n={n}: no local optimum within {budget} steps");
                }
                Ok(vec![n.to_string(), trace.num_steps().to_string(), ((1u128 << (n + 1)) - 2).to_string()])
            });
            let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
            (
                Table {
                    header: vec!["n", "steps", "predicted"],
                    rows,
                },
                Vec::new(),
            )
        }
    };

    match format {
        Format::Json => {
            let mut obj = serde_json::Map::new();
            for (k, v) in &summary {
                obj.insert(k.clone(), json!(v));
            }
            obj.insert("rows".into(), table.to_json());
            serde_json::to_writer_pretty(&mut *out, &obj)?;
            writeln!(out)?;
        }
        Format::Text => {
            match &args.output {
                Some(path) => table.write(File::create(path).with_context(|| format!("creating {}", path.display()))?)?,
                None => table.write(&mut *out)?,
            }
            write_pairs(&mut std::io::stderr(), &summary, format)?;
        }
    }
    Ok(0)
}
