use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use mindist_core::Strategy;

#[derive(Parser, Debug)]
#[command(
    name = "mindist",
    version,
    about = "Minimum distance of binary linear codes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Suppress informational messages on stderr.
    #[arg(long, short, global = true)]
    pub quiet: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute the minimum distance of a generator matrix.
    #[command(visible_alias = "distance")]
    Mindist(MindistArgs),
    /// Minimum distance by enumerating all 2^k - 1 codewords.
    Brute(BruteArgs),
    /// Write a seeded random systematic generator (I_k | A).
    Random(RandomArgs),
    /// Build a code from a construction script.
    Construct(ConstructArgs),
    /// Time the strategies on a seeded random code.
    Bench(BenchArgs),
}

#[derive(Args, Debug, Clone)]
pub struct EngineArgs {
    /// Enumeration strategy.
    #[arg(long, default_value = "saved")]
    pub algorithm: Strategy,

    /// Largest saved level (saved strategies).
    #[arg(long = "s", default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=5))]
    pub saved_levels: u8,

    /// Left combinations processed together (saved-unrolled).
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub unroll: u8,

    /// Worker threads for the saved strategies [default: available cores].
    #[arg(long, env = "MINDIST_THREADS")]
    pub threads: Option<usize>,

    /// Memory budget per saved-additions store, in MiB.
    #[arg(long, default_value_t = 256)]
    pub budget_mb: usize,

    /// Stop after this many generators and report an upper bound.
    #[arg(long, default_value_t = 16)]
    pub max_g: usize,

    /// Storage word size in bits (32 or 64).
    #[arg(long, default_value_t = 32, value_parser = parse_word_bits)]
    pub word_bits: usize,
}

#[derive(Args, Debug)]
pub struct MindistArgs {
    /// Generator matrix file ("-" for stdin).
    #[arg(long = "in", value_name = "FILE")]
    pub input: PathBuf,

    /// Write the report here instead of stdout.
    #[arg(long = "out", value_name = "FILE")]
    pub output: Option<PathBuf>,

    #[command(flatten)]
    pub engine: EngineArgs,

    /// Interrupt after this many seconds and write a checkpoint.
    #[arg(long, value_name = "SECS")]
    pub time_limit: Option<f64>,

    /// Continue from a checkpoint or an upper-bound report.
    #[arg(long, value_name = "FILE")]
    pub resume: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BruteArgs {
    #[arg(long = "in", value_name = "FILE")]
    pub input: PathBuf,

    #[arg(long = "out", value_name = "FILE")]
    pub output: Option<PathBuf>,

    /// Refuse codes with more than this many rows.
    #[arg(long, default_value_t = mindist_core::BRUTE_FORCE_MAX_K)]
    pub max_k: usize,
}

#[derive(Args, Debug)]
pub struct RandomArgs {
    #[arg(long)]
    pub k: usize,

    #[arg(long)]
    pub n: usize,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    #[arg(long = "out", value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    /// Construction script.
    #[arg(
        long,
        value_name = "FILE",
        required_unless_present = "catalog",
        conflicts_with = "catalog"
    )]
    pub script: Option<PathBuf>,

    /// Bundled script: c1 .. c7.
    #[arg(long, value_name = "NAME")]
    pub catalog: Option<String>,

    /// Starting matrix for scripts without a polynomial source.
    #[arg(long = "in", value_name = "FILE")]
    pub input: Option<PathBuf>,

    #[arg(long = "out", value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 40)]
    pub k: usize,

    #[arg(long, default_value_t = 120)]
    pub n: usize,

    #[arg(long, default_value_t = 1)]
    pub seed: u64,

    /// Strategies to run; all of them by default.
    #[arg(long, value_delimiter = ',')]
    pub algorithm: Vec<Strategy>,

    #[arg(long = "s", default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=5))]
    pub saved_levels: u8,

    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub unroll: u8,

    #[arg(long, env = "MINDIST_THREADS")]
    pub threads: Option<usize>,

    #[arg(long, default_value_t = 256)]
    pub budget_mb: usize,

    /// Generators enumerated per strategy.
    #[arg(long, default_value_t = 4)]
    pub max_g: usize,

    #[arg(long = "out", value_name = "FILE")]
    pub output: Option<PathBuf>,
}

fn parse_word_bits(s: &str) -> Result<usize, String> {
    match s {
        "32" => Ok(32),
        "64" => Ok(64),
        _ => Err("expected 32 or 64".into()),
    }
}
