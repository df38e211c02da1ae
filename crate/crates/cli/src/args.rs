use std::path::PathBuf;

use clap::builder::TypedValueParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use klcf::gen::InstanceKind;
use klcf::neighborhood::DEFAULT_MEM_BUDGET;
use klcf::tabulation::DEFAULT_BLOCK_BITS;
use klcf::Algorithm;

use crate::input::InputFormat;

/// Longest common substring with k mismatches.
#[derive(Debug, Parser)]
#[command(name = "klcf", version, args_conflicts_with_subcommands = true, subcommand_negates_reqs = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a synthetic instance to two plain files.
    Gen(GenArgs),
    /// Time algorithms on generated instances; TSV on stdout.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgoChoice {
    Auto,
    Naive,
    Neighborhood,
    Strided,
    Tabulation,
    TabulationRemap,
}

impl AlgoChoice {
    pub fn concrete(self) -> Option<Algorithm> {
        match self {
            AlgoChoice::Auto => None,
            AlgoChoice::Naive => Some(Algorithm::Naive),
            AlgoChoice::Neighborhood => Some(Algorithm::Neighborhood),
            AlgoChoice::Strided => Some(Algorithm::Strided),
            AlgoChoice::Tabulation => Some(Algorithm::Tabulation),
            AlgoChoice::TabulationRemap => Some(Algorithm::TabulationRemap),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Tsv,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Maximum number of mismatches.
    #[arg(long, required = true)]
    pub k: Option<usize>,
    #[arg(long, value_enum, default_value_t = AlgoChoice::Auto)]
    pub algo: AlgoChoice,
    /// Input file format.
    #[arg(long, value_enum, default_value_t = InputFormat::Plain)]
    pub format: InputFormat,
    /// Block width of the tabulation lookup tables.
    #[arg(long, default_value_t = DEFAULT_BLOCK_BITS, value_parser = clap::value_parser!(u8).range(1..=16).map(usize::from))]
    pub block_bits: usize,
    /// Number of pieces for the neighborhood index (default: automatic).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..).map(|v| v as usize))]
    pub pieces: Option<usize>,
    /// Neighborhood memory budget in words.
    #[arg(long, default_value_t = DEFAULT_MEM_BUDGET)]
    pub mem_budget: u64,
    /// Shorthand for `--output json`.
    #[arg(long)]
    pub json: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,
    /// Worker threads (default: all cores).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..).map(|v| v as usize))]
    pub threads: Option<usize>,
    #[arg(required = true)]
    pub file1: Option<PathBuf>,
    #[arg(required = true)]
    pub file2: Option<PathBuf>,
}

impl RunArgs {
    pub fn output_format(&self) -> OutputFormat {
        if self.json {
            OutputFormat::Json
        } else {
            self.output
        }
    }
}

fn parse_kind(s: &str) -> Result<InstanceKind, String> {
    s.parse().map_err(|e: klcf::Error| e.to_string())
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    /// `random` or `planted`.
    #[arg(long, value_parser = parse_kind, default_value = "random")]
    pub kind: InstanceKind,
    #[arg(long)]
    pub n: usize,
    /// Alphabet size, at most 255.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..=255))]
    pub sigma: u32,
    /// Mismatches in the planted pair.
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    /// Length of the planted pair.
    #[arg(long, default_value_t = 0)]
    pub len: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out1: PathBuf,
    #[arg(long)]
    pub out2: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    /// Comma-separated sequence lengths.
    #[arg(long, default_value = "1000")]
    pub n_list: String,
    /// Comma-separated alphabet sizes.
    #[arg(long, default_value = "4")]
    pub sigma_list: String,
    /// Comma-separated mismatch budgets.
    #[arg(long, default_value = "2")]
    pub k_list: String,
    /// Comma-separated algorithm names.
    #[arg(long, default_value = "strided,tabulation")]
    pub algos: String,
    #[arg(long, default_value_t = 1)]
    pub repeats: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..).map(|v| v as usize))]
    pub threads: Option<usize>,
}
