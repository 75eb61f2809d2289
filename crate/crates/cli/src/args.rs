use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "ppsign", version, about = "Signed enumeration of plane partitions with complementation symmetry")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,

    /// Write data to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Exit with status 3 when a budget stops any computation.
    #[arg(long, global = true)]
    pub strict: bool,

    /// Record wall-clock times. Without it `elapsed_ms` is null so output is reproducible.
    #[arg(long, global = true)]
    pub timing: bool,

    /// Cap on backtracking nodes for the brute-force oracle.
    #[arg(long, global = true, env = "PPSIGN_NODE_BUDGET", value_parser = clap::value_parser!(u64).range(1..))]
    pub node_budget: Option<u64>,

    /// Cap on row subsets visited by direct minor sums.
    #[arg(long, global = true, env = "PPSIGN_SUBSET_BUDGET", value_parser = clap::value_parser!(u64).range(1..))]
    pub subset_budget: Option<u64>,

    /// Per-class sign handling, as CLASS=absolute or CLASS=native. Repeatable.
    #[arg(long = "sign-convention", global = true, value_name = "CLASS=MODE")]
    pub sign_convention: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Human,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Oracle,
    Lgv,
    Formula,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count one class in one box.
    ///
    /// For tc and stc the box is a x a x 2b. For the cube classes the side is
    /// --a, or 2α with --alpha. Other classes take the box a x b x c.
    Enumerate(EnumerateArgs),
    /// Compare the oracle, the path pipeline and the product formula over a grid.
    Verify(VerifyArgs),
    /// Check one of the exact identities.
    Identity(IdentityArgs),
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub class: String,
    #[arg(long)]
    pub a: Option<u32>,
    #[arg(long)]
    pub b: Option<u32>,
    #[arg(long)]
    pub c: Option<u32>,
    #[arg(long)]
    pub alpha: Option<u32>,
    #[arg(long, value_enum, default_value_t = MethodArg::Formula)]
    pub method: MethodArg,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// A family (tc, stc, cstc, tssc, sc, sc-odd, cssc) or "all".
    #[arg(long, default_value = "all")]
    pub class: String,
    #[arg(long)]
    pub max_a: Option<u32>,
    #[arg(long)]
    pub max_b: Option<u32>,
    #[arg(long)]
    pub max_c: Option<u32>,
    #[arg(long)]
    pub max_alpha: Option<u32>,
    /// Skip the oracle for boxes with more cells than this.
    #[arg(long)]
    pub oracle_max_cells: Option<u64>,
    /// Use the minimal grid.
    #[arg(long)]
    pub smoke: bool,
}

#[derive(Debug, Args)]
pub struct IdentityArgs {
    /// detl, 2ji, m1, mrr, pfaff-saalschutz, minor-summation or recurrence-s4.
    #[arg(long)]
    pub name: String,
    /// Number of random instances.
    #[arg(long)]
    pub fuzz: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub n: Option<u32>,
    /// Rational, e.g. 2 or -3/2.
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    #[arg(long)]
    pub alpha: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<i64>,
    #[arg(long)]
    pub gamma: Option<i64>,
    /// Rational for pfaff-saalschutz, nonnegative integer otherwise.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    #[arg(long)]
    pub t: Option<u32>,
    /// Rows of the minor-summation matrix.
    #[arg(long)]
    pub p: Option<u32>,
}
