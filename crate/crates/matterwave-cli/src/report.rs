//! Report schema: check rows, JSON serialization, console rendering.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{Context, Result};
use matterwave::ResidualReport;
use serde::Serialize;
use serde_json::Value;

use crate::config::RunConfig;

/// One verified statement: a residual against a tolerance.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub method: &'static str,
    pub max_residual: f64,
    pub l2_residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convergence_ratio: Option<f64>,
    pub tolerance: f64,
    pub passed: bool,
    /// Plain-language statement of what the row verifies.
    pub reference: String,
}

impl CheckRow {
    /// Row for a residual-suite report.
    pub fn from_residual(r: &ResidualReport<f64>) -> Self {
        Self {
            name: r.identity.name().to_string(),
            method: r.method.name(),
            max_residual: r.max_residual,
            l2_residual: r.l2_residual,
            convergence_ratio: r.convergence_ratio,
            tolerance: r.tolerance,
            passed: r.passed,
            reference: r.identity.description().to_string(),
        }
    }

    /// Row for a single scalar residual.
    pub fn scalar(
        name: impl Into<String>,
        method: &'static str,
        residual: f64,
        tolerance: f64,
        reference: impl Into<String>,
    ) -> Self {
        Self {
            name: name.into(),
            method,
            max_residual: residual,
            l2_residual: residual,
            convergence_ratio: None,
            tolerance,
            passed: residual.is_finite() && residual <= tolerance,
            reference: reference.into(),
        }
    }
}

/// Pass/fail counts over all rows.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// The full machine-readable result of one command.
#[derive(Debug, Serialize)]
pub struct Report {
    pub version: u32,
    pub command: &'static str,
    pub seed: u64,
    /// Generator behind every randomized row, for reproducibility.
    pub rng: &'static str,
    pub config_echo: RunConfig,
    pub notes: Vec<String>,
    pub checks: Vec<CheckRow>,
    /// Auxiliary numbers that do not fit the row shape.
    pub extras: BTreeMap<String, Value>,
    pub summary: Summary,
}

impl Report {
    pub fn new(command: &'static str, seed: u64, config: RunConfig) -> Self {
        Self {
            version: 1,
            command,
            seed,
            rng: "chacha8",
            config_echo: config,
            notes: Vec::new(),
            checks: Vec::new(),
            extras: BTreeMap::new(),
            summary: Summary::default(),
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn push(&mut self, row: CheckRow) {
        self.checks.push(row);
    }

    pub fn extra(&mut self, key: impl Into<String>, value: Value) {
        self.extras.insert(key.into(), value);
    }

    /// Recomputes the summary from the rows.
    pub fn finalize(&mut self) {
        self.summary = Summary {
            total: self.checks.len(),
            passed: self.checks.iter().filter(|c| c.passed).count(),
            failed: self.checks.iter().filter(|c| !c.passed).count(),
        };
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Deterministic JSON rendering (struct order, sorted extras, no clock).
    pub fn to_json(&self) -> Result<String> {
        let mut text = serde_json::to_string_pretty(self).context("serializing report")?;
        text.push('\n');
        Ok(text)
    }

    /// One line per row plus a summary line.
    pub fn render_console(&self) -> String {
        let mut out = String::new();
        for row in &self.checks {
            let verdict = if row.passed { "PASS" } else { "FAIL" };
            let ratio = match row.convergence_ratio {
                Some(r) => format!("  ratio={r:.2}"),
                None => String::new(),
            };
            out.push_str(&format!(
                "{verdict}  {name:<34} [{method}]  max={max:.3e}  tol={tol:.3e}{ratio}\n",
                name = row.name,
                method = row.method,
                max = row.max_residual,
                tol = row.tolerance,
            ));
        }
        out.push_str(&format!(
            "{}: {} checks, {} passed, {} failed\n",
            if self.summary.failed == 0 { "OK" } else { "FAILED" },
            self.summary.total,
            self.summary.passed,
            self.summary.failed,
        ));
        out
    }

    /// Prints the console view and, given a directory, writes the JSON file.
    pub fn emit(&self, out_dir: Option<&Path>, file_name: &str) -> Result<()> {
        print!("{}", self.render_console());
        if let Some(dir) = out_dir {
            std::fs::create_dir_all(dir)
                .with_context(|| format!("creating output directory {}", dir.display()))?;
            let path = dir.join(file_name);
            std::fs::write(&path, self.to_json()?)
                .with_context(|| format!("writing {}", path.display()))?;
        }
        Ok(())
    }
}
