use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Longest repeat queries over a text. Positions are 1-indexed.
#[derive(Debug, Parser)]
#[command(name = "lrq", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build an index file from raw text or from each record of a FASTA file.
    Index(IndexArgs),
    /// Longest repeat(s) covering one position.
    Query(QueryArgs),
    /// Leftmost longest repeat of every position.
    AllPositions(AllPositionsArgs),
    /// Time index construction and the all-positions pass on random texts.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Raw,
    Fasta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Tsv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TsvOnly {
    Tsv,
}

#[derive(Debug, Args)]
pub struct IndexArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::Raw)]
    pub format: InputFormat,
    /// Index file to write. FASTA record `r` (1-based) goes to `<out>.<r>`.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Index file written by `lrq index`.
    #[arg(long)]
    pub index: Option<PathBuf>,
    /// Literal text to index on the fly.
    #[arg(long)]
    pub text: Option<String>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Tsv)]
    pub output: OutputFormat,
    /// Include the repeated bytes (escaped) in each record.
    #[arg(long)]
    pub show_substring: bool,
    /// Print a TSV header line.
    #[arg(long)]
    pub header: bool,
}

#[derive(Debug, Args)]
pub struct QueryArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long)]
    pub pos: usize,
    /// Report every longest repeat covering the position, not just the
    /// leftmost.
    #[arg(long)]
    pub all: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct AllPositionsArgs {
    #[command(flatten)]
    pub source: Source,
    /// Use the quadratic reference pass instead of the linear one.
    #[arg(long)]
    pub reference: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated, strictly ascending text sizes.
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 4)]
    pub alphabet: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Timed runs per size; the median is reported.
    #[arg(long, default_value_t = 3)]
    pub repeats: usize,
    #[arg(long, value_enum, default_value_t = TsvOnly::Tsv)]
    pub output: TsvOnly,
    #[arg(long)]
    pub header: bool,
}
