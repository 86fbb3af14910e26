//! `geoflow`: representation data, special functions, length spectra,
//! zeta values and singularity ledgers from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 convergence error, 4 model invariant error.

mod commands;
mod config;
mod format;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use geoflow::rootdata::RootDataError;
use geoflow::specfun::SpecfunError;
use geoflow::spectrum::SpectrumError;
use geoflow::zeta::ZetaError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Convergence(String),
    #[error("{0}")]
    Invariant(String),
    #[error("{failed} of {total} properties failed")]
    Verify { failed: usize, total: usize },
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Verify { .. } => 1,
            CliError::Input(_) => 2,
            CliError::Convergence(_) => 3,
            CliError::Invariant(_) => 4,
        }
    }
}

impl From<RootDataError> for CliError {
    fn from(e: RootDataError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<SpecfunError> for CliError {
    fn from(e: SpecfunError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<SpectrumError> for CliError {
    fn from(e: SpectrumError) -> Self {
        match e {
            SpectrumError::Convergence(_) | SpectrumError::InsufficientSpectrum { .. } => CliError::Convergence(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<ZetaError> for CliError {
    fn from(e: ZetaError) -> Self {
        if e.is_convergence() {
            return CliError::Convergence(e.to_string());
        }
        match e {
            ZetaError::Invariant(m) => CliError::Invariant(m),
            other => CliError::Input(other.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "geoflow", version, about = "Zeta functions of odd-dimensional hyperbolic manifolds")]
pub struct Cli {
    /// Key/value configuration file (vol, p, C_Gamma, alpha_n, c_norm, tail_target, digits).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Significant digits of numeric output.
    #[arg(long, global = true)]
    pub digits: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

/// Weight selection shared by most commands. `n` defaults to the length of `--sigma`.
#[derive(Args, Debug, Clone)]
pub struct SigmaArgs {
    #[arg(long)]
    pub n: Option<usize>,
    /// Highest weight of the M-representation, e.g. `1,0` or `3/2,1/2`.
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Representation data of sigma.
    Rep(SigmaArgs),
    /// Special functions.
    #[command(subcommand)]
    Specfun(SpecfunCommand),
    /// Length spectrum files.
    #[command(subcommand)]
    Spectrum(SpectrumCommand),
    /// Zeta values, scans and the factorization check.
    #[command(subcommand)]
    Zeta(ZetaCommand),
    /// Singularity ledger.
    #[command(subcommand)]
    Ledger(LedgerCommand),
    /// Run the property suites and print one JSON line per property.
    Verify {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Rep,
    Specfun,
    Zeta,
}

#[derive(Subcommand, Debug)]
pub enum SpecfunCommand {
    /// Omega(sigma, lambda); `--check` compares with the partial-fraction form.
    Omega {
        #[command(flatten)]
        sigma: SigmaArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        check: bool,
    },
    /// P_j(sigma, lambda) for one or all j, with the closed product form.
    Pj {
        #[command(flatten)]
        sigma: SigmaArgs,
        #[arg(long)]
        j: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// The integers c_{j,l}(sigma).
    Cjl {
        #[command(flatten)]
        sigma: SigmaArgs,
    },
    /// c_nu(sigma : lambda) and its logarithmic derivative.
    Cnu {
        #[command(flatten)]
        sigma: SigmaArgs,
        /// Highest weight of the K-type.
        #[arg(long)]
        nu: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Plancherel polynomial coefficients in lambda^2, optionally evaluated.
    Plancherel {
        #[command(flatten)]
        sigma: SigmaArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum SpectrumCommand {
    /// Synthetic spectrum with exponential length gaps.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.1)]
        mean_gap: f64,
        /// Output file; `.csv` selects CSV, anything else JSONL.
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Check a spectrum file and report the fitted growth constant.
    Validate {
        file: PathBuf,
        /// Warn if the fitted growth constant exceeds this bound.
        #[arg(long)]
        growth_bound: Option<f64>,
    },
    /// Convert between JSONL and CSV.
    Convert {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Import complex lengths `l+theta i` (n = 1).
    ImportComplex {
        file: PathBuf,
        /// Completeness cutoff; `inf` if the list is complete.
        #[arg(long, default_value = "0")]
        cutoff: String,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Selberg,
    SelbergProduct,
    Sym,
    Antisym,
    RuelleSigma,
    RuelleTau,
    Xi,
}

#[derive(Args, Debug, Clone)]
pub struct EvalArgs {
    #[command(flatten)]
    pub sigma: SigmaArgs,
    #[arg(long, value_enum, default_value_t = Kind::Selberg)]
    pub kind: Kind,
    /// Spectrum file; without it the spectrum is empty and incomplete.
    #[arg(long)]
    pub spectrum: Option<PathBuf>,
    #[arg(long)]
    pub tail_target: Option<f64>,
    /// Highest weight of the G-representation for `ruelle-tau`.
    #[arg(long, allow_hyphen_values = true)]
    pub tau: Option<String>,
    /// Largest symmetric degree for `selberg-product`.
    #[arg(long, default_value_t = 40)]
    pub k_max: u32,
    /// Largest primitive length for `selberg-product`; defaults to all listed primes.
    #[arg(long)]
    pub cutoff: Option<f64>,
    /// Report the logarithm instead of the value.
    #[arg(long)]
    pub log: bool,
    #[arg(long)]
    pub vol: Option<f64>,
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long)]
    pub c_gamma: Option<f64>,
    #[arg(long)]
    pub c_norm: Option<f64>,
}

#[derive(Subcommand, Debug)]
pub enum ZetaCommand {
    /// Evaluate at one point.
    Eval {
        #[command(flatten)]
        args: EvalArgs,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
    /// Evaluate on a rectangular grid and write CSV.
    Scan {
        #[command(flatten)]
        args: EvalArgs,
        /// Real range `start:end:steps`.
        #[arg(long, allow_hyphen_values = true)]
        re: String,
        /// Imaginary range `start:end:steps`.
        #[arg(long, allow_hyphen_values = true, default_value = "0:0:1")]
        im: String,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Output file; standard output if absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare log R(s, sigma) with the alternating sum of log Z.
    FactorCheck {
        #[command(flatten)]
        sigma: SigmaArgs,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long)]
        spectrum: Option<PathBuf>,
        #[arg(long)]
        tail_target: Option<f64>,
        /// Synthetic spectrum `count:seed` used when no file is given.
        #[arg(long, default_value = "200:1")]
        synthetic: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum LedgerCommand {
    /// Predict zeros and poles from a model file.
    Predict {
        model: PathBuf,
        /// Override the model's sigma.
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<String>,
        /// Emit topological points down to -max_depth.
        #[arg(long, default_value_t = 10)]
        max_depth: u32,
        /// CSV `re,im,order` instead of a table.
        #[arg(long)]
        csv: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
