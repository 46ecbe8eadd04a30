//! The JSON report and the CSV table emitter.
//!
//! A report echoes the config it came from, records the tolerances in force,
//! and pairs every checked quantity with the tolerance it was checked against
//! (the `{"value": …, "tolerance": …}` objects built by [`measured`]). The
//! only field that differs between two runs of the same config is
//! `wall_clock_ms`.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// Tabular section of a report, emitted as CSV on request.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

/// Outcome of one tool invocation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    /// Version of this tool, from the crate metadata.
    pub tool_version: String,
    /// Command that produced the report, kebab-case.
    pub command: String,
    /// Quadrature order actually used after resolving flag, config, and
    /// environment overrides.
    pub quadrature_order: usize,
    /// The configuration as parsed, echoed back.
    pub config: crate::config::ExperimentConfig,
    /// Every tolerance in force during the run, by name.
    pub tolerances: BTreeMap<String, f64>,
    /// Command-specific scalar results; checked quantities carry their
    /// tolerance inline.
    pub results: Value,
    /// Tabular results, present for sweep-style commands.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Table>,
    pub verdict: String,
    /// Wall-clock duration of the run; the one nondeterministic field.
    pub wall_clock_ms: f64,
}

/// A checked scalar: its value and the tolerance it was compared against.
pub fn measured(value: f64, tolerance: f64) -> Value {
    json!({ "value": value, "tolerance": tolerance })
}

/// Writes the tabular section as RFC-4180-style CSV: header row, one line
/// per data row, 17 significant digits, LF line endings.
pub fn emit_csv(report: &Report, path: &Path) -> Result<()> {
    let Some(table) = &report.table else {
        bail!(
            "command {:?} produced no tabular section; nothing to write as CSV",
            report.command
        );
    };
    let mut out = String::new();
    out.push_str(&table.columns.join(","));
    out.push('\n');
    for row in &table.rows {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:.16e}")).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    let mut file = std::fs::File::create(path)
        .with_context(|| format!("cannot create CSV file {}", path.display()))?;
    file.write_all(out.as_bytes())
        .with_context(|| format!("cannot write CSV file {}", path.display()))?;
    Ok(())
}
