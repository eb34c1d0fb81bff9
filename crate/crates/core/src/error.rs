use thiserror::Error;

use crate::tree::Diagnostic;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity must be at least 2, got {0}")]
    InvalidArity(i64),

    #[error("falling factorial with negative base {0}")]
    NegativeBase(i64),

    #[error("falling factorial with negative length {0}")]
    NegativeLength(i64),

    #[error("operation requires a non-empty tree")]
    EmptyTree,

    #[error("forest root {root} does not match an increasing leaf of the y-part")]
    AttachmentMismatch { root: u32 },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid tree: {}", fmt_diagnostics(.0))]
    InvalidTree(Vec<Diagnostic>),

    #[error("invalid forest: {0}")]
    InvalidForest(String),

    #[error("enumeration budget of {cap} trees exceeded")]
    BudgetExceeded { cap: u64 },

    #[error("t({n},{k}) summation for p={p} is not an integer")]
    NonIntegerSum { p: u32, n: i64, k: i64 },

    #[error(
        "y({n},{k}) recursion for p={p}: term m={m} has negative multiplier but non-zero y factor"
    )]
    NegativeMultiplier { p: u32, n: i64, k: i64, m: i64 },

    #[error("row sum for p={p}, n={n} is {got}, expected {expected}")]
    RowSumMismatch {
        p: u32,
        n: i64,
        got: String,
        expected: String,
    },

    #[error("number of trials must be at least 1")]
    NoTrials,
}

fn fmt_diagnostics(diags: &[Diagnostic]) -> String {
    diags
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
