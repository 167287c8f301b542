//! `gpce`: build, inspect, and sample polynomial chaos expansions in
//! correlated Gaussian inputs.
//!
//! Exit codes: 0 success, 1 validation failure, 2 input error, 3 I/O error.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};

use commands::{Format, Outcome};
use config::{BuildFlags, RunConfig, SigmaSource};

#[derive(Parser)]
#[command(name = "gpce", version, about = "Polynomial chaos expansions for dependent Gaussian inputs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an expansion and write the model file.
    Build {
        /// JSON run configuration; flags override its fields.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Covariance: CSV or JSON file, or inline JSON such as `[[1,0],[0,1]]`.
        #[arg(long)]
        sigma: Option<SigmaSource>,
        /// example1_case1..4, example2(t, rho), example3_synthetic, or a JSON polynomial.
        #[arg(long)]
        function: Option<String>,
        #[arg(long)]
        order: Option<u32>,
        /// Integrate coefficients with this many Sobol points instead of exactly.
        #[arg(long)]
        qmc: Option<usize>,
        /// Leading Sobol points to drop, origin included; defaults to the
        /// sample count when it is a power of two and 0 otherwise.
        #[arg(long)]
        skip: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Format of the printed mean/variance summary.
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Print the mean and variance of a model.
    Stats {
        model: PathBuf,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw surrogate samples; writes a samples CSV and a histogram CSV.
    Sample {
        model: PathBuf,
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Histogram path; defaults to `<out stem>_hist.csv`.
        #[arg(long)]
        histogram: Option<PathBuf>,
    },
    /// Run a validation suite: example1, example2, or properties.
    Validate {
        suite: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the Gram matrix of one degree as CSV.
    Gram {
        #[arg(long)]
        sigma: SigmaSource,
        #[arg(long, visible_alias = "order")]
        degree: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a standardized Hermite polynomial as JSON.
    Hermite {
        #[arg(long)]
        sigma: SigmaSource,
        /// Multi-index such as `2,0,1`.
        #[arg(long)]
        index: String,
        /// Print the unstandardized polynomial instead.
        #[arg(long)]
        raw: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Build {
            config,
            sigma,
            function,
            order,
            qmc,
            skip,
            seed,
            out,
            format,
        } => {
            let config = RunConfig::resolve(BuildFlags {
                config,
                sigma,
                function,
                order,
                qmc,
                skip,
                seed,
                out,
            })?;
            commands::build(config, format)
        }
        Command::Stats { model, format, out } => commands::stats(&model, format, out.as_deref()),
        Command::Sample {
            model,
            n,
            seed,
            out,
            histogram,
        } => commands::sample(&model, n as usize, seed, &out, histogram.as_deref()),
        Command::Validate { suite, out } => commands::validate(&suite, out.as_deref()),
        Command::Gram { sigma, degree, out } => commands::gram(&sigma, degree, out.as_deref()),
        Command::Hermite {
            sigma,
            index,
            raw,
            out,
        } => commands::hermite(&sigma, &index, raw, out.as_deref()),
    }
}

/// I/O failures anywhere in the cause chain map to 3, everything else to 2.
fn exit_code(err: &anyhow::Error) -> u8 {
    let io = err.chain().any(|cause| {
        cause.is::<std::io::Error>() || matches!(cause.downcast_ref(), Some(gpce::Error::Io(_)))
    });
    if io {
        3
    } else {
        2
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
