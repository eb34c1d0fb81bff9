//! Shared inputs for the benchmarks.

use pary_md::PAryTree;

/// Sizes used for the exhaustive-enumeration benchmarks, `(p, n)`.
pub const ENUMERATION_SIZES: &[(u32, u32)] = &[(2, 5), (2, 6), (3, 4), (3, 5)];

/// A fixed batch of sampled trees for the tree-statistic benchmarks.
pub fn sampled_batch(p: u32, n: u32, count: u64) -> Vec<PAryTree> {
    (0..count)
        .map(|seed| pary_md::sample_tree(p, n, seed).expect("valid arity"))
        .collect()
}
