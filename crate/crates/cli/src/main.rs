//! `mcdm`: rank alternatives with aggregation-type decision-making methods.

mod commands;
mod decimal;
mod error;
mod input;
mod report;

use clap::{Parser, Subcommand};

use mcdm_core::WeightPolicy;

use crate::error::CliResult;
use crate::input::{load_problem, InputFormat};
use crate::report::{resolve_format, Format};

#[derive(Parser)]
#[command(
    name = "mcdm",
    version,
    about = "Aggregation-type multi-criteria decision-making (SAW, MEW, AHP, ANP, COPRAS, MOORA, FUCA, WASPAS)",
    after_help = "Input is a CSV or JSON problem file, or one of the bundled fixtures:\n  table8_1, e8_1, e8_2, e8_3, ahp_8_4, anp_8_5\nThe MCDM_FORMAT environment variable sets the default output format."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rank the alternatives with one matrix method
    Rank {
        /// Problem file (.csv or .json) or bundled fixture name
        file: String,
        /// One of: saw, mew, copras, moora, fuca, waspas
        #[arg(long)]
        method: String,
        /// WASPAS blend parameter in [0, 1] (default 0.5)
        #[arg(long)]
        lambda: Option<f64>,
        /// Rescale weights to sum to 1 before validating
        #[arg(long)]
        renormalize: bool,
        /// Output format (default: table, or MCDM_FORMAT)
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Rank with several methods side by side
    Compare {
        file: String,
        /// Comma-separated method list (default: all six matrix methods)
        #[arg(long, value_delimiter = ',')]
        method: Vec<String>,
        /// WASPAS blend parameter in [0, 1] (default 0.5)
        #[arg(long)]
        lambda: Option<f64>,
        #[arg(long)]
        renormalize: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Analytic hierarchy process: criteria weights, local and global priorities
    Ahp {
        file: String,
        /// Stop after the criteria weights and their consistency ratio
        #[arg(long)]
        weights_only: bool,
        /// Feed the AHP criteria weights into a matrix method instead
        #[arg(long, value_name = "METHOD")]
        hybrid: Option<String>,
        /// Fail (exit 13) when any consistency ratio exceeds 0.1
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        renormalize: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Analytic network process: supermatrices and limit priorities
    Anp {
        file: String,
        /// Fail (exit 13) when any block consistency ratio exceeds 0.1
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// WASPAS sensitivity analysis over a lambda grid
    WaspasSweep {
        file: String,
        /// Lambda grid as start:stop:step (default 0:1:0.1)
        #[arg(long)]
        grid: Option<String>,
        #[arg(long)]
        renormalize: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

fn weight_policy(renormalize: bool) -> WeightPolicy {
    if renormalize {
        WeightPolicy::Renormalize
    } else {
        WeightPolicy::Strict
    }
}

fn run(cli: Cli) -> CliResult<String> {
    match cli.command {
        Command::Rank {
            file,
            method,
            lambda,
            renormalize,
            format,
        } => {
            let format = resolve_format(format)?;
            let parsed = load_problem(&file, InputFormat::Auto, weight_policy(renormalize))?;
            commands::cmd_rank(&parsed, &method, lambda, format)
        }
        Command::Compare {
            file,
            method,
            lambda,
            renormalize,
            format,
        } => {
            let format = resolve_format(format)?;
            let parsed = load_problem(&file, InputFormat::Auto, weight_policy(renormalize))?;
            commands::cmd_compare(&parsed, &method, lambda, format)
        }
        Command::Ahp {
            file,
            weights_only,
            hybrid,
            strict,
            renormalize,
            format,
        } => {
            let format = resolve_format(format)?;
            let parsed = load_problem(&file, InputFormat::Auto, weight_policy(renormalize))?;
            commands::cmd_ahp(&parsed, weights_only, hybrid.as_deref(), strict, format)
        }
        Command::Anp {
            file,
            strict,
            format,
        } => {
            let format = resolve_format(format)?;
            let parsed = load_problem(&file, InputFormat::Auto, WeightPolicy::Strict)?;
            commands::cmd_anp(&parsed, strict, format)
        }
        Command::WaspasSweep {
            file,
            grid,
            renormalize,
            format,
        } => {
            let format = resolve_format(format)?;
            let parsed = load_problem(&file, InputFormat::Auto, weight_policy(renormalize))?;
            commands::cmd_waspas_sweep(&parsed, grid.as_deref(), format)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => print!("{output}"),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.exit_code());
        }
    }
}
