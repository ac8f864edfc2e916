//! Command-line runner: builds the configured wave model and verifies it.

mod commands;
mod config;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "matterwave",
    version,
    about = "Builds analytic plane-wave particle models and verifies every identity they claim"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full verification suite described by a config file.
    Verify {
        /// Path to the JSON run configuration.
        #[arg(long)]
        config: PathBuf,
        /// Directory to write report.json into (console output either way).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Stencil order for the numerical method: 2 or 4.
        #[arg(long)]
        order: Option<u32>,
        /// Seed for the randomized sample rows (overrides the config).
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Sample every field channel on the configured lattice as CSV.
    Fields {
        /// Path to the JSON run configuration.
        #[arg(long)]
        config: PathBuf,
        /// Directory to write fields.csv into (stdout otherwise).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check frame invariants under boosts along the x axis.
    Boost {
        /// Path to the JSON run configuration (needs a "boost" section).
        #[arg(long)]
        config: PathBuf,
        /// Directory to write boost.json into (console output either way).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Seed recorded in the report for reproducibility.
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// Exit codes: 0 all checks passed, 1 some check failed, 2 unusable config.
fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<u8> {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            config,
            out,
            order,
            seed,
        } => {
            let cfg = config::load_config(&config)?;
            let seed = seed.or(cfg.seed).unwrap_or(0);
            commands::cmd_verify(cfg, seed, order, out.as_deref())
        }
        Command::Fields { config, out } => {
            let cfg = config::load_config(&config)?;
            commands::cmd_fields(cfg, out.as_deref())
        }
        Command::Boost { config, out, seed } => {
            let cfg = config::load_config(&config)?;
            let seed = seed.or(cfg.seed).unwrap_or(0);
            commands::cmd_boost(cfg, seed, out.as_deref())
        }
    }
}
