use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quadkit::rng::DEFAULT_SEED;

#[derive(Debug, Parser)]
#[command(name = "quadkit", version, about = "Exact checks for Koszul algebras, Betti tables and their geometric criteria")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// `rationals`, `prime:P` or a bare prime; overrides the input file.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Internal-degree cutoff N.
    #[arg(long, global = true, default_value_t = 4, value_parser = parse_cutoff)]
    pub cutoff: usize,
    /// Homological-degree cutoff.
    #[arg(long, global = true, default_value_t = 4, value_parser = parse_cutoff)]
    pub hom_cutoff: usize,
    /// Seed for every random choice (decimal or 0x-prefixed hex).
    #[arg(long, global = true, default_value_t = DEFAULT_SEED, value_parser = parse_seed)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

impl Format {
    pub fn as_str(&self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Text => "text",
        }
    }
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Quadraticity, numerics and Koszulness of a presented algebra.
    CheckPresentation {
        input: PathBuf,
        /// Also test distributivity of the relation lattice in this degree.
        #[arg(long)]
        distributivity: Option<usize>,
    },
    /// General position, the Kempf prediction and a direct check for points.
    Points { input: PathBuf },
    /// The pencil complex on a genus-0 model: numerology, hypotheses and a
    /// direct check of the conclusions.
    PencilComplex {
        /// Degree of L = O(d) on the line.
        #[arg(long)]
        d: usize,
        /// Degree of the divisor D, with 1 <= e < d.
        #[arg(long)]
        e: usize,
        /// Highest homological index of the truncated complex.
        #[arg(long, default_value_t = quadkit::curvecomplex::DEFAULT_DEPTH)]
        depth: usize,
        /// Internal-degree window of the complex; defaults to twice the depth.
        #[arg(long)]
        window: Option<usize>,
        /// Replace the second section by one sharing a root with the first.
        #[arg(long)]
        degenerate: bool,
    },
    /// The regularity criterion for O(m) over the degree-d rational normal curve.
    Regularity {
        /// Degree of the rational normal curve.
        #[arg(long)]
        d: usize,
        /// Twist of the line bundle, possibly negative.
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
    },
    /// Stratum invariants, verdicts and double-cover bookkeeping on a grid.
    Strata {
        /// Smallest genus of the hyperelliptic curve in the grid.
        #[arg(long, default_value_t = 2)]
        gh_min: i64,
        /// Largest genus of the hyperelliptic curve in the grid.
        #[arg(long, default_value_t = 3)]
        gh_max: i64,
        /// Largest stratum index i.
        #[arg(long, default_value_t = 4)]
        i_max: i64,
    },
}

fn parse_cutoff(s: &str) -> Result<usize, String> {
    let v: usize = s.parse().map_err(|_| format!("`{s}` is not a nonnegative integer"))?;
    if v < 2 {
        return Err("cutoffs must be at least 2".into());
    }
    Ok(v)
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let t = s.trim();
    match t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(&hex.replace('_', ""), 16),
        None => t.replace('_', "").parse(),
    }
    .map_err(|_| format!("`{s}` is not a 64-bit seed"))
}
