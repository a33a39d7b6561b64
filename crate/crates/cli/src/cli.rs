use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use loglin_core::DEFAULT_SIZE_CAP;

#[derive(Debug, Parser)]
#[command(name = "loglin", version, about = "Rank, dimension and degrees of freedom of hierarchical log-linear models")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

/// Where the complex comes from. Exactly one source is allowed.
#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Named family: cyclic, main-effect, saturated, simplex-boundary (needs --m)
    #[arg(long)]
    pub family: Option<String>,

    /// Facet list as JSON, e.g. "[[1,2],[2,3]]" (needs --m)
    #[arg(long)]
    pub facets: Option<String>,

    /// Inline model JSON: {"m": 4, "facets": [[1,2]], "levels": [2,2,2,2]}
    #[arg(long = "spec")]
    pub spec_json: Option<String>,

    /// Model JSON file, or - for stdin
    #[arg(long)]
    pub input: Option<PathBuf>,

    /// Number of variables for --family and --facets
    #[arg(long)]
    pub m: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct LevelArgs {
    /// Same number of levels for every variable
    #[arg(long, conflicts_with = "levels")]
    pub r: Option<u64>,

    /// Per-variable level counts, e.g. 2,3,4
    #[arg(long, value_delimiter = ',')]
    pub levels: Option<Vec<u64>>,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Facets, f-vector, e-vector, minimal non-faces and the Dehn-Sommerville flag
    Info {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        out: OutputArgs,
    },

    /// Rank of the design matrix, model dimension and degrees of freedom
    Rank {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        levels: LevelArgs,
        /// Also build the design matrix and compare its exact rank
        #[arg(long)]
        verify: bool,
        /// Maximum number of joint cells (matrix columns) for --verify
        #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
        size_cap: u128,
        #[command(flatten)]
        out: OutputArgs,
    },

    /// Convert between f-vectors and e-vectors; optionally check the series
    Evector {
        #[command(flatten)]
        input: InputArgs,
        /// Convert this f-vector instead of reading a complex
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "e_vector")]
        f_vector: Option<Vec<u64>>,
        /// Convert this e-vector back to an f-vector
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        e_vector: Option<Vec<i64>>,
        /// Evaluate the e-vector polynomial at r
        #[arg(long)]
        r: Option<u64>,
        /// Compare the truncated coarse series with its closed form at this point
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        x: Option<Vec<f64>>,
        /// Truncation degree for --x
        #[arg(long, default_value_t = 25)]
        degree: usize,
        /// Largest allowed |truncated - closed form| for --x
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        #[command(flatten)]
        out: OutputArgs,
    },

    /// Check the rank formula against the matrix oracle on every complex with m <= max-m
    VerifySweep {
        #[arg(long)]
        max_m: usize,
        /// Level values; every level vector over this set is checked
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        levels: Vec<u64>,
        /// Additional seeded random complexes per entry of --random-m
        #[arg(long, default_value_t = 0)]
        random: usize,
        /// Vertex counts for the random complexes
        #[arg(long, value_delimiter = ',', default_value = "4,5")]
        random_m: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
        size_cap: u128,
        #[command(flatten)]
        out: OutputArgs,
    },

    /// Print the design matrix: "rows cols", then one row of 0/1 per line
    DumpMatrix {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        levels: LevelArgs,
        #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
        size_cap: u128,
    },
}
