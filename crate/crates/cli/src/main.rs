//! `capillary-lab`: run a JSON-described experiment against the geometry
//! core and emit a JSON report, with optional CSV tables for plotting
//! elsewhere.
//!
//! Exit status: 0 on success, 2 when the computation finished but a theorem
//! hypothesis is violated (for instance a contact angle below a right angle),
//! 1 on any error (malformed config, infeasible geometry, unwritable output).

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use capillary_lab::config::ExperimentConfig;
use capillary_lab::report::{emit_csv, Report};
use capillary_lab::runner::{self, RunStatus};

#[derive(Parser)]
#[command(name = "capillary-lab", version, about)]
struct Cli {
    #[command(subcommand)]
    action: Action,
}

#[derive(Subcommand)]
enum Action {
    /// Run the experiment described by a JSON config file.
    Run {
        /// Path to the experiment config (JSON).
        config: PathBuf,
        /// Write the JSON report here as well as to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the tabular section as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Quadrature order, overriding the config and the
        /// CAPILLARY_LAB_ORDER environment variable.
        #[arg(long)]
        order: Option<usize>,
        /// Seed for random-body generators, overriding the config.
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.action {
        Action::Run {
            config,
            out,
            csv,
            order,
            seed,
        } => match run_action(&config, out, csv, order, seed) {
            Ok(status) => ExitCode::from(status.code()),
            Err(err) => {
                eprintln!("error: {err:#}");
                ExitCode::from(1)
            }
        },
    }
}

fn run_action(
    config_path: &PathBuf,
    out: Option<PathBuf>,
    csv: Option<PathBuf>,
    order_flag: Option<usize>,
    seed_flag: Option<u64>,
) -> Result<RunStatus> {
    let text = std::fs::read_to_string(config_path)
        .with_context(|| format!("cannot read config {}", config_path.display()))?;
    let config = ExperimentConfig::from_json(&text)
        .with_context(|| format!("invalid config {}", config_path.display()))?;
    let order = runner::resolve_order(order_flag, &config)?;

    let (report, status) = runner::run(&config, order, seed_flag)?;
    write_outputs(&report, out, csv)?;
    Ok(status)
}

fn write_outputs(report: &Report, out: Option<PathBuf>, csv: Option<PathBuf>) -> Result<()> {
    let rendered = serde_json::to_string_pretty(report)?;
    println!("{rendered}");

    // The --out flag wins over the config's output path.
    let out_path = out.or_else(|| report.config.output_path.clone().map(PathBuf::from));
    if let Some(path) = out_path {
        std::fs::write(&path, format!("{rendered}\n"))
            .with_context(|| format!("cannot write report {}", path.display()))?;
    }
    if let Some(path) = csv {
        emit_csv(report, &path)?;
    }
    Ok(())
}
