use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub claim: String,
    pub passed: bool,
    pub detail: String,
    /// Counterexample states, left to right with X_1 rightmost.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub counterexamples: Vec<String>,
}

impl Check {
    pub fn new(claim: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            claim: claim.into(),
            passed,
            detail: detail.into(),
            counterexamples: Vec::new(),
        }
    }

    pub fn with_counterexamples(mut self, examples: Vec<String>) -> Self {
        self.counterexamples = examples;
        self
    }
}

#[derive(Debug, Default, Serialize)]
pub struct Report {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

/// Counterexamples shown per check in text mode.
const TEXT_EXAMPLES: usize = 5;

impl Report {
    pub fn new(suite: &str) -> Self {
        Report {
            suite: suite.to_string(),
            passed: true,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.passed &= check.passed;
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        for c in other.checks {
            self.push(c);
        }
    }

    pub fn write(&self, out: &mut impl Write, format: Format) -> Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)?;
            }
            Format::Text => {
                for c in &self.checks {
                    let tag = if c.passed { "PASS" } else { "FAIL" };
                    writeln!(out, "{tag} {}: {}", c.claim, c.detail)?;
                    for e in c.counterexamples.iter().take(TEXT_EXAMPLES) {
                        writeln!(out, "    {e}")?;
                    }
                    if c.counterexamples.len() > TEXT_EXAMPLES {
                        writeln!(out, "    ... {} more", c.counterexamples.len() - TEXT_EXAMPLES)?;
                    }
                }
                writeln!(out, "{} {}", self.suite, if self.passed { "passed" } else { "failed" })?;
            }
        }
        Ok(())
    }
}

/// Key-value summary, or a flat JSON object.
pub fn write_pairs(out: &mut impl Write, pairs: &[(String, String)], format: Format) -> Result<()> {
    match format {
        Format::Text => {
            for (k, v) in pairs {
                writeln!(out, "{k}={v}")?;
            }
        }
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> =
                pairs.iter().map(|(k, v)| (k.clone(), v.clone().into())).collect();
            serde_json::to_writer_pretty(&mut *out, &map)?;
            writeln!(out)?;
        }
    }
    Ok(())
}
