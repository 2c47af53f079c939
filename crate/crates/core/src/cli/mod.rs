//! Command-line front end.
//!
//! Every subcommand renders as text, JSON or CSV. Exact values are printed as
//! `p/q` strings; floating-point values only ever appear under `approx` keys
//! (JSON) or `approx_` columns (CSV).

mod render;

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::error::Error;
use crate::{parse_rational, ExactBasePair};

pub use render::dispatch;

/// Listing more prefixes than this requires `--max-depth`.
pub const LIST_DEPTH_CAP: usize = 16;
/// Counting deeper than this requires `--max-depth`.
pub const COUNT_DEPTH_CAP: usize = 40;

#[derive(Debug, Parser)]
#[command(name = "nonuniform", version, about = "Expansions of reals in two non-integer bases")]
pub struct RunConfig {
    /// Larger base, rational text such as 3/4 or 0.75.
    #[arg(long, global = true)]
    pub beta0: Option<String>,
    /// Smaller base, 1/2 < beta1 <= beta0.
    #[arg(long, global = true)]
    pub beta1: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for every sampled quantity.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for enumeration (defaults to all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Greedy,
    Lazy,
    Intermediate,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Digits and orbit of x under the greedy, lazy or intermediate map.
    Expand {
        #[arg(long)]
        x: String,
        #[arg(long, value_enum, default_value_t = Algorithm::Greedy)]
        algorithm: Algorithm,
        /// Threshold for the intermediate map.
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long, default_value_t = 20)]
        depth: usize,
    },
    /// All expansion prefixes of x to a fixed depth.
    Enumerate {
        #[arg(long)]
        x: String,
        #[arg(long, default_value_t = 10)]
        depth: usize,
        /// Print only the count; allows deeper levels.
        #[arg(long)]
        count_only: bool,
        /// Override the default depth cap (16 when listing, 40 when counting).
        #[arg(long)]
        max_depth: Option<usize>,
    },
    /// Exact uniqueness decision for an eventually periodic sequence.
    Unique {
        /// Sequence text, e.g. "101(01)".
        #[arg(long, required_unless_present = "zeros", conflicts_with = "zeros")]
        sequence: Option<String>,
        /// Use 0^zeros (01)^ω instead.
        #[arg(long)]
        zeros: Option<usize>,
    },
    /// Truth values of the regime inequalities.
    Regime,
    /// Branching intervals, closed form against recursion.
    Lambda {
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// Also build a branching witness for this point.
        #[arg(long)]
        x: Option<String>,
        #[arg(long, default_value_t = 2)]
        splits: usize,
    },
    /// Dimension of the alternating attractor and a box-counting estimate.
    Dimension {
        #[arg(long, default_value_t = 20)]
        depth: usize,
    },
    /// Expansion counts over seeded grid points of I.
    Survey {
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 20)]
        depth: usize,
        /// Report how many samples have more than this many prefixes.
        #[arg(long, default_value_t = 1)]
        threshold: u128,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Clap(#[from] clap::Error),
    #[error(transparent)]
    Domain(#[from] Error),
}

impl CliError {
    /// 0 success, 1 parse or usage error, 2 domain or regime error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Clap(e) => match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            },
            CliError::Domain(e) if e.is_parse() => 1,
            CliError::Domain(_) => 2,
        }
    }
}

impl RunConfig {
    pub fn bases(&self) -> Result<ExactBasePair, CliError> {
        let (Some(b0), Some(b1)) = (&self.beta0, &self.beta1) else {
            return Err(CliError::Usage("both --beta0 and --beta1 are required".into()));
        };
        Ok(ExactBasePair::new(parse_rational(b0)?, parse_rational(b1)?)?)
    }
}

/// Parses arguments (including the program name) and renders the output.
pub fn run<I, T>(args: I) -> Result<String, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = RunConfig::try_parse_from(args)?;
    execute(&config)
}

pub fn execute(config: &RunConfig) -> Result<String, CliError> {
    match config.threads {
        Some(threads) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| CliError::Usage(format!("cannot start {threads} threads: {e}")))?;
            pool.install(|| dispatch(config))
        }
        None => dispatch(config),
    }
}
