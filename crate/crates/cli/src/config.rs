//! Command-line arguments and the run configuration echoed in every output.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StrategyArg {
    /// Closed form or explicit construction for `H(2)`, canonical census otherwise.
    Auto,
    Centralizer,
    Canonical,
    GenusTwoFormula,
    GenusTwoConstruction,
}

/// Budgets and output options shared by all subcommands.
#[derive(Debug, Clone, Args)]
pub struct GlobalOptions {
    /// Output format.
    #[arg(
        long,
        global = true,
        env = "ONECYL_FORMAT",
        value_enum,
        default_value = "text"
    )]
    pub format: Format,
    /// Worker threads; all available cores when omitted.
    #[arg(long, global = true, env = "ONECYL_THREADS")]
    pub threads: Option<usize>,
    /// Seed of the random sampler.
    #[arg(long, global = true, env = "ONECYL_SEED", default_value_t = 42)]
    pub seed: u64,
    /// Largest number of squares in a census.
    #[arg(long, global = true, env = "ONECYL_MAX_SQUARES", default_value_t = 10)]
    pub max_squares: usize,
    /// Bound on the integer lengths of sampled interval exchanges.
    #[arg(long, global = true, env = "ONECYL_GRID", default_value_t = 64)]
    pub grid: u64,
    /// Number of random samples.
    #[arg(long, global = true, env = "ONECYL_SAMPLES", default_value_t = 200_000)]
    pub samples: u64,
    /// Length of the Rauzy walk before each sample.
    #[arg(long, global = true, env = "ONECYL_WALK", default_value_t = 500)]
    pub walk: u64,
    /// Absolute precision of numeric zeta evaluations.
    #[arg(long, global = true, env = "ONECYL_PRECISION", default_value_t = 1e-12)]
    pub precision: f64,
}

#[derive(Debug, Clone, Parser)]
#[command(
    name = "onecyl",
    version,
    about = "One-cylinder diagrams, square-tiled censuses and volumes of strata"
)]
pub struct Cli {
    #[command(flatten)]
    pub options: GlobalOptions,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// One-cylinder diagrams of a stratum with their exact contributions.
    Diagrams { stratum: String },
    /// Contributions, sampled cylinder frequencies and volumes for all
    /// quadratic strata of a dimension.
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(4..=6))]
        dim: u8,
    },
    /// Total one-cylinder contribution with bounds when available.
    C1 { stratum: String },
    /// Weighted one-cylinder count by characters and by closed form.
    /// Accepts the templates `H(2g-2)` and `H(1^(2g-2))` with `--g`.
    Frobenius {
        stratum: String,
        #[arg(long)]
        g: Option<usize>,
    },
    /// Generating function of one-cylinder diagrams.
    Genfun {
        /// `F_n` for Abelian strata.
        #[arg(
            long,
            conflicts_with = "quadratic",
            required_unless_present = "quadratic"
        )]
        abelian: Option<usize>,
        /// `F_{l,m,n}` for quadratic strata.
        #[arg(long, num_args = 3, value_names = ["L", "M", "N"])]
        quadratic: Option<Vec<usize>>,
    },
    /// Census of square-tiled surfaces by squares and horizontal cylinders.
    Enumerate {
        stratum: String,
        #[arg(long, value_enum, default_value = "auto")]
        strategy: StrategyArg,
        /// Fit the leading coefficient of the cumulative counts.
        #[arg(long)]
        fit: bool,
    },
    /// Band-count statistics of integer interval exchanges.
    Bands {
        stratum: String,
        /// Every length vector up to the grid bound instead of random samples.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Joint distribution of horizontal and vertical cylinder counts.
    Correlation { stratum: String },
    /// Volume estimate from the exact contribution and a sampled proportion.
    #[command(alias = "estimate")]
    VolumeEstimate { stratum: String },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Diagrams { .. } => "diagrams",
            Command::Table { .. } => "table",
            Command::C1 { .. } => "c1",
            Command::Frobenius { .. } => "frobenius",
            Command::Genfun { .. } => "genfun",
            Command::Enumerate { .. } => "enumerate",
            Command::Bands { .. } => "bands",
            Command::Correlation { .. } => "correlation",
            Command::VolumeEstimate { .. } => "volume-estimate",
        }
    }

    /// The stratum or template argument, when the command takes one.
    pub fn stratum(&self) -> Option<&str> {
        match self {
            Command::Diagrams { stratum }
            | Command::C1 { stratum }
            | Command::Frobenius { stratum, .. }
            | Command::Enumerate { stratum, .. }
            | Command::Bands { stratum, .. }
            | Command::Correlation { stratum }
            | Command::VolumeEstimate { stratum } => Some(stratum),
            _ => None,
        }
    }
}

/// Everything that determines the output of a run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub arguments: Vec<String>,
    pub stratum: Option<String>,
    pub max_squares: usize,
    pub grid: u64,
    pub samples: u64,
    pub walk: u64,
    pub seed: u64,
    pub format: Format,
    pub precision: f64,
    pub threads: Option<usize>,
    pub version: String,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Self {
        let o = &cli.options;
        let arguments = match &cli.command {
            Command::Table { dim } => vec![dim.to_string()],
            Command::Frobenius { g: Some(g), .. } => vec![format!("g={g}")],
            Command::Genfun {
                abelian: Some(n), ..
            } => vec![format!("abelian={n}")],
            Command::Genfun {
                quadratic: Some(lmn),
                ..
            } => vec![format!(
                "quadratic={}",
                lmn.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            )],
            Command::Enumerate { strategy, fit, .. } => vec![
                format!(
                    "strategy={}",
                    strategy.to_possible_value().expect("named").get_name()
                ),
                format!("fit={fit}"),
            ],
            Command::Bands { exhaustive, .. } => vec![format!("exhaustive={exhaustive}")],
            _ => Vec::new(),
        };
        RunConfig {
            command: cli.command.name().to_string(),
            arguments,
            stratum: cli.command.stratum().map(str::to_string),
            max_squares: o.max_squares,
            grid: o.grid,
            samples: o.samples,
            walk: o.walk,
            seed: o.seed,
            format: o.format,
            precision: o.precision,
            threads: o.threads,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}
