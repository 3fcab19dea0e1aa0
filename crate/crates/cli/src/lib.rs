//! Library side of the `symbis` command line tool.

pub mod error;
pub mod load;
mod render;
pub mod report;
mod run;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use error::CliError;
pub use report::Report;
pub use run::{run, Outcome};

#[derive(Parser, Debug)]
#[command(name = "symbis", version, about = "Symbolic bisimulation minimization")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the closed symbolic transition system.
    Slts(Common),
    /// Compute symbolic bisimilarity by partition refinement.
    Minimize(Common),
    /// Decide whether the two seeds are bisimilar.
    Bisim(Common),
    /// Print the saturated transition system up to a context bound.
    Saturate {
        #[command(flatten)]
        common: Common,
        /// Exploration depth from the seeds.
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
    /// Compare symbolic minimization with brute-force saturated bisimilarity.
    OracleCheck(Common),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Model files; the extension (.swc, .net, .pi) selects the calculus.
    #[arg(required = true)]
    pub files: Vec<PathBuf>,
    /// Seed state names; all declared states when omitted.
    #[arg(long = "seed")]
    pub seeds: Vec<String>,
    /// Context size bound; the instance's sufficient bound when omitted.
    #[arg(long)]
    pub bound: Option<usize>,
    #[arg(long, default_value_t = symbis::engine::DEFAULT_MAX_STATES)]
    pub max_states: usize,
    #[arg(long, default_value_t = symbis::engine::DEFAULT_MAX_ITERS)]
    pub max_iters: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Print every intermediate partition.
    #[arg(long)]
    pub trace: bool,
    /// Compute signatures in parallel.
    #[arg(long)]
    pub parallel: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Dot,
}
