// Copyright 2026 commonbath contributors
// SPDX-License-Identifier: Apache-2.0

//! Command-line interface to the collective-dissipation simulator.
//!
//! Exit codes: 0 success, 1 validation failure, 2 usage error,
//! 3 numerical failure.

mod output;
mod run;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "commonbath",
    version,
    about = "Simulator for qubits dissipating into a common zero-temperature environment"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evolve the subspace coefficients and write a time series.
    Evolve(EvolveArgs),
    /// Pairwise concurrence curves (or figure presets).
    Concurrence(ConcurrenceArgs),
    /// Stationary concurrence scans over system size.
    Scan(ScanArgs),
    /// Run the cross-validation suite and report per-property results.
    Validate(ValidateArgs),
    /// Emit the stationary correlation graph.
    Graph(GraphArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Args)]
struct CommonOutput {
    /// Output file; defaults to stdout, or to a file inside
    /// $COMMONBATH_OUT_DIR when that is set.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct EvolveArgs {
    /// Number of initial excitations (1 or 2).
    #[arg(long)]
    e: u32,
    /// System size.
    #[arg(long)]
    n: u32,
    /// Final time (physical units when --rate is given).
    #[arg(long = "t-max", default_value_t = 5.0)]
    t_max: f64,
    /// Number of output samples.
    #[arg(long, default_value_t = 101)]
    samples: usize,
    /// Dissipation rate; rescales the time axis only.
    #[arg(long, default_value_t = 1.0)]
    rate: f64,
    /// Also run the full-space oracle and report the elementwise maximum
    /// deviation of the reconstructed state per sample.
    #[arg(long)]
    oracle: bool,
    /// Oracle integrator step (dimensionless time).
    #[arg(long)]
    dt: Option<f64>,
    /// Oracle trace-drift guard / steady-state tolerance.
    #[arg(long)]
    tolerance: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[command(flatten)]
    out: CommonOutput,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Preset {
    /// Excited-ground concurrence curves for one excitation, n = 2,6,10,14.
    Fig1,
    /// Stationary concurrence vs system size for one excitation.
    Fig2,
    /// Ground-ground concurrence curves for one excitation, n = 2,6,10,14.
    Fig3,
    /// Both pair-class curves for two excitations, n = 4,7,10,13.
    Fig5,
}

#[derive(Args)]
struct ConcurrenceArgs {
    /// Number of initial excitations (1 or 2); not used with --preset.
    #[arg(long, required_unless_present = "preset")]
    e: Option<u32>,
    /// System size; not used with --preset.
    #[arg(long, required_unless_present = "preset")]
    n: Option<u32>,
    #[arg(long = "t-max", default_value_t = 5.0)]
    t_max: f64,
    #[arg(long, default_value_t = 101)]
    samples: usize,
    #[arg(long, default_value_t = 1.0)]
    rate: f64,
    /// Bundle the curve families used in the figures.
    #[arg(long, value_enum)]
    preset: Option<Preset>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[command(flatten)]
    out: CommonOutput,
}

#[derive(Args)]
struct ScanArgs {
    /// Number of initial excitations (1 or 2).
    #[arg(long)]
    e: u32,
    #[arg(long = "n-min")]
    n_min: u32,
    #[arg(long = "n-max")]
    n_max: u32,
    /// Cross-check rows against the full-space oracle (n <= 8 only).
    #[arg(long)]
    oracle: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[command(flatten)]
    out: CommonOutput,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Grid {
    Quick,
    Full,
}

#[derive(Args)]
struct ValidateArgs {
    /// Grid size: quick (seconds) or full (minutes, oracle to n = 8).
    #[arg(long, value_enum, default_value_t = Grid::Full)]
    grid: Grid,
    /// Also write the machine-readable JSON report here.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GraphArgs {
    /// Number of initial excitations (1 or 2).
    #[arg(long)]
    e: u32,
    #[arg(long)]
    n: u32,
    /// Edge threshold in (0,1), or "auto" for the geometric mean of the
    /// two stationary class values.
    #[arg(long, default_value = "auto")]
    threshold: String,
    /// Compute weights from the oracle steady state instead of the
    /// stationary formulas (n <= 8).
    #[arg(long)]
    oracle: bool,
    #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
    format: GraphFormat,
    #[command(flatten)]
    out: CommonOutput,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Evolve(args) => run::evolve(args),
        Command::Concurrence(args) => run::concurrence(args),
        Command::Scan(args) => run::scan(args),
        Command::Validate(args) => run::validate(args),
        Command::Graph(args) => run::graph(args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

/// An error carrying its process exit code.
pub(crate) struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    pub fn numerical(message: impl Into<String>) -> Self {
        CliError {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<commonbath::Error> for CliError {
    fn from(err: commonbath::Error) -> Self {
        match err {
            commonbath::Error::InvalidInput(m) | commonbath::Error::Capacity(m) => {
                CliError::usage(m)
            }
            commonbath::Error::Numerical(m) | commonbath::Error::Convergence(m) => {
                CliError::numerical(m)
            }
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError {
            code: 3,
            message: format!("io error: {err}"),
        }
    }
}
