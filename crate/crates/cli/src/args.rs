use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "corepath",
    version,
    about = "Bounded Motzkin path bijections and t-core partitions"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply phi (free path to prefix) or psi (prefix to free path).
    Map(MapArgs),
    /// Convert between partitions, bead sequences and paths.
    Convert(ConvertArgs),
    /// Print a table of one of the counting formulas.
    Count(CountArgs),
    /// List the members of a path family.
    Enumerate(EnumerateArgs),
    /// Run the exhaustive verification suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Phi,
    Psi,
}

#[derive(Debug, Args)]
pub struct MapArgs {
    pub direction: Direction,
    /// Word over u, d, f.
    pub path: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum From {
    Partition,
    Sequence,
    Path,
    Prefix,
    Symmetric,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    #[arg(long)]
    pub t: usize,
    /// Representation of VALUE.
    #[arg(long, value_enum)]
    pub from: From,
    /// Use the self-conjugate chain (implied by --from prefix/symmetric).
    #[arg(long)]
    pub self_conjugate: bool,
    /// Partition "4,4,2,2", sequence "[0,0,2,2]" or a path word.
    #[arg(allow_hyphen_values = true)]
    pub value: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormulaArg {
    Cc,
    Scc,
    Cigler,
    Narayana,
    Sympeaks,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    pub formula: FormulaArg,
    /// Ranges are inclusive: "2..6", "2..=6", "3" or "1,4,7".
    #[arg(long)]
    pub t: Option<String>,
    #[arg(long)]
    pub m: Option<String>,
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long)]
    pub k: Option<String>,
    #[arg(long)]
    pub i: Option<String>,
    /// Print the reference layout (cc: t=2..6; scc: paired rows t=2..11; m=1..8).
    #[arg(long)]
    pub paper_tables: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Fbar,
    Mbar,
    FbarC,
    MbarC,
    Cornerless,
    Symmetric,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Number of non-flat steps.
    #[arg(long)]
    pub m: Option<usize>,
    /// Number of flat steps.
    #[arg(long)]
    pub r: Option<usize>,
    /// Strip index.
    #[arg(long)]
    pub k: Option<usize>,
    /// Word length (cornerless and symmetric families).
    #[arg(long)]
    pub len: Option<usize>,
    /// Number of flats (cornerless and symmetric families).
    #[arg(long)]
    pub flats: Option<usize>,
    /// Print only the number of members.
    #[arg(long)]
    pub count_only: bool,
    /// Refuse to list families larger than this.
    #[arg(long, env = "COREPATH_CAP", default_value_t = 10_000_000)]
    pub cap: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Bijection,
    Runs,
    Cornerless,
    Tcore,
    #[value(name = "self_conjugate", alias = "self-conjugate")]
    SelfConjugate,
    Counts,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MutationArg {
    #[value(name = "case0")]
    Case0,
    #[value(name = "case1-i")]
    Case1NoBreak,
    #[value(name = "case1-ii")]
    Case1Break,
    #[value(name = "case2-i")]
    Case2NoBreak,
    #[value(name = "case2-ii")]
    Case2Break,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub suite: SuiteArg,
    /// Largest word length m + r to enumerate.
    #[arg(long, default_value_t = 10)]
    pub max_size: usize,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    pub workers: Option<usize>,
    /// Report elapsed time per suite.
    #[arg(long)]
    pub timing: bool,
    /// Corrupt one case of phi (self-test of the suites).
    #[arg(long, value_enum, hide = true)]
    pub inject_mutation: Option<MutationArg>,
}
