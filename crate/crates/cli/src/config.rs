use std::fmt;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pary_md::count::Family;
use pary_md::enumerate::DEFAULT_BUDGET;

#[derive(Debug, Parser)]
#[command(
    name = "pary-md",
    version,
    about = "Count p-ary labeled trees by the size of their maximal decreasing subtree"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the triangle of a counting family over a range of n.
    Table(TableArgs),
    /// Check every formula against exhaustive enumeration.
    Verify(VerifyArgs),
    /// Sample uniform random trees and compare MD sizes with t(n,k).
    Sample(SampleArgs),
    /// Print a single exact value.
    Count(CountArgs),
    /// Canonicalize a tree and show its MD subtree and decomposition.
    Encode(EncodeArgs),
}

#[derive(Debug, Args)]
pub struct Common {
    /// Arity (number of child slots per vertex).
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..))]
    pub p: u32,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum, default_value_t = FamilyArg::T)]
    pub family: FamilyArg,

    /// Rows to print, e.g. `0..10` (inclusive) or `8`.
    #[arg(long)]
    pub n: NRange,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n: NRange,

    /// Maximum number of trees and forests to generate in total.
    #[arg(long, env = "PARY_MD_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,

    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long, value_enum, default_value_t = FamilyArg::T)]
    pub family: FamilyArg,

    #[arg(long)]
    pub n: u32,

    #[arg(long)]
    pub k: i64,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct EncodeArgs {
    /// Tree in canonical text form, e.g. `(2,(1,_,_),_)`.
    #[arg(long, conflicts_with_all = ["n", "seed"], required_unless_present = "n")]
    pub tree: Option<String>,

    /// Size of a uniformly sampled tree to encode instead of `--tree`.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: Option<u32>,

    #[arg(long)]
    pub seed: Option<u64>,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Y,
    F,
    T,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Y => Family::Y,
            FamilyArg::F => Family::F,
            FamilyArg::T => Family::T,
        }
    }
}

/// Inclusive, non-empty range of sizes: `a..b`, `a..=b`, or a single `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NRange {
    pub start: u32,
    pub end: u32,
}

impl NRange {
    pub fn iter(&self) -> RangeInclusive<u32> {
        self.start..=self.end
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("invalid size `{t}`"))
        };
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if start > end {
            return Err(format!("empty range {start}..{end}"));
        }
        Ok(NRange { start, end })
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}
