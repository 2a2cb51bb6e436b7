use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "weil",
    version,
    about = "Enumerate and classify Weil q-polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Report the properties of one tuple or polynomial.
    Check(CheckArgs),
    /// Stream the members of a coefficient set, one CSV line per tuple.
    Enum(EnumArgs),
    /// Stream one classification record per member of a set.
    Classify(EnumArgs),
    /// Build (or load from the cache) the census for one (q, g, epsilon).
    Census(CensusArgs),
    /// Run an exact bound check; exits 1 if any bound fails.
    Verify(VerifyArgs),
    /// Print |X_g| for g = 1..=G with the growth exponent.
    Growth(GrowthArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Thm23,
    #[value(name = "aL-identity")]
    AlIdentity,
    Recursion,
}

#[derive(Args, Debug)]
pub struct Output {
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Leave out the timestamp so repeated runs are byte-identical.
    #[arg(long)]
    pub no_header: bool,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub g: Option<usize>,
    /// Half-coefficient list a_1,...,a_g.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "poly")]
    pub a: Option<String>,
    /// Full coefficient list, highest degree first.
    #[arg(long, allow_hyphen_values = true)]
    pub poly: Option<String>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct EnumArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub g: usize,
    /// X, Y, Z, ALL or ALL_ORDINARY.
    #[arg(long, default_value = "ALL_ORDINARY")]
    pub set: String,
    /// Codimension for Z.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub parts: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct CensusArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub g: usize,
    /// Rational "num/den" in (0, 1/3).
    #[arg(long, default_value = "1/4")]
    pub epsilon: String,
    #[arg(long, default_value_t = 4)]
    pub parts: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub g: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub epsilon: Option<String>,
    #[arg(long)]
    pub c1: Option<u32>,
    #[arg(long)]
    pub c2: Option<u32>,
    #[arg(long)]
    pub kmax: Option<u32>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct GrowthArgs {
    #[arg(long)]
    pub q: u64,
    /// Largest dimension.
    #[arg(long)]
    pub g: usize,
    #[command(flatten)]
    pub output: Output,
}
