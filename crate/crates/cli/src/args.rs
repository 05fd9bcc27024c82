use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "wpvol", version, about = "Exact Weil-Petersson volume polynomials")]
pub struct Cli {
    /// Cache directory; defaults to $WPVOL_CACHE, then ./wpvol-cache.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Keep everything in memory.
    #[arg(long, global = true, conflicts_with = "cache_dir")]
    pub no_cache: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print V_{g,n}.
    Compute {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        boundaries: usize,
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
        /// Also print LaTeX.
        #[arg(long)]
        latex: bool,
    },
    /// Check relations over a range and print a JSON report.
    Verify {
        #[arg(long, value_enum)]
        relation: Relation,
        #[arg(long, default_value_t = 1)]
        max_genus: u32,
        #[arg(long, default_value_t = 5)]
        max_boundaries: usize,
    },
    /// Print the psi/kappa_1 intersection number.
    Intersect {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        n: usize,
        /// Comma-separated psi exponents, one per marked point.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        alpha: Vec<i64>,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        kappa: i64,
    },
    /// Write one volume as a store document or LaTeX.
    Export {
        #[arg(long, value_enum)]
        format: ExportFormat,
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        boundaries: usize,
        /// Write here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Inspect or empty the cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Lift,
    Mirzakhani,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Relation {
    String,
    Dilaton,
    Second,
    Factor,
    String2,
    Dilaton2,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, Subcommand)]
pub enum CacheAction {
    Verify,
    Clear,
}
