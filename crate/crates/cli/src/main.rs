// SPDX-License-Identifier: MIT OR Apache-2.0

//! `gini`: Gini means, molecular-weight averages and inequality audits from the
//! command line.
//!
//! Exit codes: 0 success, 1 unreadable or invalid data, 2 usage or parameter
//! error, 3 a verification check failed.

mod commands;
mod failure;
mod plot;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "gini",
    version,
    about = "Gini means and polymer molar-mass averages"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one mean of a list of positive numbers.
    #[command(allow_negative_numbers = true)]
    Mean(MeanArgs),
    /// Averages and polydispersity of a molecular-weight distribution.
    #[command(
        name = "mwd-report",
        visible_alias = "report",
        allow_negative_numbers = true
    )]
    MwdReport(ReportArgs),
    /// Check the monotonicity theorem along exponent chains.
    #[command(allow_negative_numbers = true)]
    Verify(VerifyArgs),
    /// Write a synthetic distribution.
    #[command(subcommand)]
    Generate(GenerateCommand),
    /// Log-mass histogram with marker lines at selected averages.
    Plot(PlotArgs),
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("selector").required(true).args(["p", "r", "lehmer"])))]
pub struct MeanArgs {
    /// Sample values.
    #[arg(conflicts_with = "input", required_unless_present = "input")]
    pub values: Vec<f64>,
    /// Distribution file (CSV or JSON); masses are the values, abundances the weights.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Gini mean exponents `--p P --q Q`.
    #[arg(long, requires = "q")]
    pub p: Option<f64>,
    #[arg(long, requires = "p")]
    pub q: Option<f64>,
    /// Power mean of order R.
    #[arg(long)]
    pub r: Option<f64>,
    /// Lehmer mean of order P.
    #[arg(long, value_name = "P")]
    pub lehmer: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Mark-Houwink exponent for Mv, in (0, 2].
    #[arg(long, default_value_t = gini_core::polymer::DEFAULT_MARK_HOUWINK)]
    pub s: f64,
    /// Exponent for the hydrodynamic and sedimentation means, in (0, 1).
    #[arg(long)]
    pub b: Option<f64>,
    /// Extra Gini mean `P:Q`; repeatable.
    #[arg(long, value_name = "P:Q", value_parser = parse_pair)]
    pub custom: Vec<(f64, f64)>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Write here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["input", "random"])))]
pub struct VerifyArgs {
    /// Distribution file; masses are the values, abundances the weights.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Draw N random samples from SEED.
    #[arg(long, num_args = 2, value_names = ["SEED", "N"])]
    pub random: Option<Vec<u64>>,
    /// `default`, or chains of `p:q` pairs separated by `,` with chains separated by `;`.
    #[arg(long, default_value = "default")]
    pub grid: String,
    /// Also compare the kernel with the extended-precision oracle.
    #[arg(long)]
    pub oracle: bool,
    /// Largest relative kernel/oracle disagreement accepted by `--oracle`.
    #[arg(long, default_value_t = 1e-12, value_name = "TOL")]
    pub rel_tol: f64,
    /// Write a JSON report of every verdict here.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GenerateCommand {
    /// Most probable distribution `n_k ∝ x^(k-1)`.
    Flory {
        #[arg(long, default_value_t = 100.0)]
        m0: f64,
        #[arg(long)]
        x: f64,
        #[arg(long, default_value_t = 1e-12)]
        tail: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Poisson distribution of chain lengths.
    Poisson {
        #[arg(long, default_value_t = 100.0)]
        m0: f64,
        #[arg(long)]
        mean_degree: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Discretised log-normal distribution.
    Lognormal {
        #[arg(long)]
        median: f64,
        #[arg(long)]
        sigma: f64,
        #[arg(long, default_value_t = 64)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// `.svg` for the histogram, `.csv` for the binned table.
    #[arg(long)]
    pub out: PathBuf,
    /// Comma-separated subset of Mn,Mw,Mz,Mv; empty for none.
    #[arg(long, default_value = "Mn,Mw,Mz,Mv")]
    pub marks: String,
    #[arg(long, default_value_t = gini_core::polymer::DEFAULT_MARK_HOUWINK)]
    pub s: f64,
    #[arg(long, default_value_t = 24)]
    pub bins: usize,
}

fn parse_pair(text: &str) -> Result<(f64, f64), String> {
    let (p, q) = text
        .split_once(':')
        .ok_or_else(|| format!("expected P:Q, got `{text}`"))?;
    let parse = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|_| format!("`{s}` is not a number"))
    };
    Ok((parse(p)?, parse(q)?))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Mean(args) => commands::mean(&args),
        Command::MwdReport(args) => commands::report(&args),
        Command::Verify(args) => commands::verify(&args),
        Command::Generate(cmd) => commands::generate(&cmd),
        Command::Plot(args) => commands::plot(&args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            if let Some(message) = failure.message() {
                eprintln!("error: {message}");
            }
            ExitCode::from(failure.code())
        }
    }
}
