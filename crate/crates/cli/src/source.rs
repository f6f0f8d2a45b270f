//! Instance loading shared by `run` and `analyze census`.

use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use climb_core::landscapes::{
    decode_state, encode, make_counting_boolean_instance, make_counting_symbol_instance, make_pairs_instance,
    StepSchedule, SymbolState, WindingLandscape,
};
use climb_core::search::format_digits;
use climb_core::{Landscape, VcspInstance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Generator {
    Pairs,
    CountingSymbol,
    CountingBoolean,
    Winding,
}

#[derive(Args, Debug, Clone)]
pub struct GenParams {
    /// Size parameter: variables for `pairs`, symbols for the counting
    /// instances, levels for `winding`.
    #[arg(long)]
    pub n: usize,

    /// Reward of the (1, 1) pair in the pairs instance.
    #[arg(long, default_value_t = 2)]
    pub alpha: i64,

    /// Step schedule of the winding landscape: `semismooth` or `root2path`.
    #[arg(long, default_value = "semismooth")]
    pub schedule: String,
}

#[derive(Args, Debug, Clone)]
pub struct SourceArgs {
    /// Instance document written by `gen`.
    #[arg(long, conflicts_with = "generator")]
    pub instance: Option<PathBuf>,

    /// Generate the instance in memory instead of reading a file.
    #[arg(long, value_enum, requires = "n")]
    pub generator: Option<Generator>,

    #[arg(long)]
    pub n: Option<usize>,

    #[arg(long, default_value_t = 2)]
    pub alpha: i64,

    #[arg(long, default_value = "semismooth")]
    pub schedule: String,
}

pub enum Loaded {
    Vcsp(VcspInstance),
    Winding(WindingLandscape),
}

pub fn generate(kind: Generator, p: &GenParams) -> Result<Loaded> {
    Ok(match kind {
        Generator::Pairs => Loaded::Vcsp(make_pairs_instance(p.n, p.alpha)?),
        Generator::CountingSymbol => Loaded::Vcsp(make_counting_symbol_instance(p.n)?),
        Generator::CountingBoolean => Loaded::Vcsp(make_counting_boolean_instance(p.n)?),
        Generator::Winding => {
            if p.n == 0 {
                bail!("winding needs --n >= 1");
            }
            Loaded::Winding(WindingLandscape::new(StepSchedule::by_name(&p.schedule, p.n)?))
        }
    })
}

impl SourceArgs {
    pub fn load(&self) -> Result<Loaded> {
        match (&self.instance, self.generator) {
            (Some(path), _) => {
                let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                Loaded::from_document(&text)
            }
            (None, Some(kind)) => generate(
                kind,
                &GenParams {
                    n: self.n.expect("clap requires --n"),
                    alpha: self.alpha,
                    schedule: self.schedule.clone(),
                },
            ),
            (None, None) => bail!("give either --instance FILE or --generator KIND --n N"),
        }
    }
}

impl Loaded {
    /// Reads either document format; the VCSP document carries a `format`
    /// field, the winding one does not.
    pub fn from_document(text: &str) -> Result<Loaded> {
        let value: serde_json::Value = serde_json::from_str(text).context("instance is not valid JSON")?;
        if value.get("format").is_some() {
            Ok(Loaded::Vcsp(VcspInstance::from_document(text)?))
        } else {
            Ok(Loaded::Winding(WindingLandscape::from_document(text)?))
        }
    }

    pub fn to_document(&self) -> Result<String> {
        Ok(match self {
            Loaded::Vcsp(v) => v.to_document()?,
            Loaded::Winding(w) => w.to_document()?,
        })
    }

    pub fn landscape(&self) -> &(dyn Landscape + Sync) {
        match self {
            Loaded::Vcsp(v) => v,
            Loaded::Winding(w) => w,
        }
    }

    pub fn kind(&self) -> &str {
        match self {
            Loaded::Vcsp(v) => v.metadata().get("kind").map_or("vcsp", String::as_str),
            Loaded::Winding(_) => "winding",
        }
    }

    fn is_symbolic(&self) -> bool {
        self.kind() == "counting-symbol"
    }

    /// Parses a start state: symbol notation for the counting instances
    /// (encoded for the Boolean one), a digit string otherwise.
    pub fn parse_state(&self, text: &str) -> Result<Vec<u8>> {
        let n = self.landscape().num_variables();
        let digits: Vec<u8> = text
            .chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| c.to_digit(10).map(|d| d as u8))
            .collect::<Option<_>>()
            .unwrap_or_default();
        let state = if !self.is_symbolic() && digits.len() == n {
            digits
        } else if self.is_symbolic() || self.kind() == "counting-boolean" {
            let s: SymbolState = text.parse().map_err(|e| anyhow::anyhow!("bad symbol state {text:?}: {e}"))?;
            if self.is_symbolic() {
                s.to_values()
            } else {
                encode(&s)
            }
        } else {
            bail!("state {text:?} must list {n} digits");
        };
        self.landscape().validate(&state)?;
        Ok(state)
    }

    pub fn format_state(&self, values: &[u8]) -> String {
        if self.is_symbolic() {
            if let Ok(s) = SymbolState::from_values(values) {
                return s.to_string();
            }
        }
        format_digits(values)
    }

    /// Symbol reading of a Boolean counting state, when it decodes.
    pub fn decoded(&self, values: &[u8]) -> Option<String> {
        (self.kind() == "counting-boolean")
            .then(|| decode_state(values).map(|s| s.to_string()))
            .flatten()
    }

    /// Human-readable summary lines: sizes plus the metadata.
    pub fn describe(&self) -> Vec<(String, String)> {
        let mut out = vec![("kind".to_string(), self.kind().to_string())];
        match self {
            Loaded::Vcsp(v) => {
                out.push(("variables".into(), v.num_variables().to_string()));
                out.push(("constraints".into(), v.constraints().len().to_string()));
                out.push(("max_arity".into(), v.max_arity().to_string()));
                let mut weights: Vec<String> = v.constraints().iter().map(|c| c.weight.to_string()).collect();
                weights.dedup();
                out.push(("weights".into(), weights.join(" ")));
                for (k, val) in v.metadata() {
                    if k != "kind" {
                        out.push((k.clone(), val.clone()));
                    }
                }
            }
            Loaded::Winding(w) => {
                out.push(("variables".into(), (2 * w.n()).to_string()));
                out.push(("n".into(), w.n().to_string()));
                let s = w.schedule();
                let join = |f: &dyn Fn(usize) -> String| (1..=s.levels()).map(f).collect::<Vec<_>>().join(" ");
                out.push(("s_plus".into(), join(&|k| s.plus(k).to_string())));
                out.push(("s_minus".into(), join(&|k| s.minus(k).to_string())));
            }
        }
        out
    }
}
