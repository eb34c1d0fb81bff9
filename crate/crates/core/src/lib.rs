//! Exact enumeration of labeled p-ary trees refined by the size of their
//! maximal decreasing subtree.
//!
//! The counting families live in [`count`]; [`enumerate`] provides the
//! brute-force generators that cross-check them, and [`sample`] draws
//! uniform random trees for statistical checks.

pub mod count;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod sample;
pub mod tree;

pub use count::{count_f, count_t, count_y, t_row, CountTable, Counter, Family};
pub use enumerate::{
    enumerate_forests, enumerate_trees, forest_oracle, md_histogram, y_histogram, y_oracle,
    EnumerationBudget, MdHistogram,
};
pub use error::{Error, Result};
pub use exact::{binomial, decreasing_count, falling, fuss_catalan, Nat};
pub use sample::{sample_md_distribution, sample_tree, SampleReport};
pub use tree::{Attachment, Decomposition, Diagnostic, Forest, PAryTree};
