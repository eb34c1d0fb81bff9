//! Uniform random p-ary labeled trees.
//!
//! A shape is drawn as a uniformly shuffled Łukasiewicz word with `n`
//! internal symbols and `(p-1)n + 1` leaf symbols. Exactly one of its
//! `pn + 1` rotations is a valid preorder code (cycle lemma), and every
//! shape has exactly `pn + 1` words, so the decoded shape is uniform. Leaves
//! of the full tree are then dropped and a uniform permutation of `[n]` is
//! written onto the vertices in preorder. Every shape admits the same `n!`
//! labelings, so the product is uniform over all labeled trees.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::count::Counter;
use crate::error::{Error, Result};
use crate::exact::{check_arity, labeled_tree_count, Nat};
use crate::tree::{PAryTree, Vertex, VertexId};

/// Draws a tree uniformly from `T^(p)_n`; deterministic in `seed`.
pub fn sample_tree(p: u32, n: u32, seed: u64) -> Result<PAryTree> {
    sample_tree_with(p, n, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn sample_tree_with<R: Rng + ?Sized>(p: u32, n: u32, rng: &mut R) -> Result<PAryTree> {
    check_arity(p)?;
    if n == 0 {
        return Ok(PAryTree::empty(p));
    }
    let leaves = (p as usize - 1) * n as usize + 1;
    let mut word: Vec<bool> = std::iter::repeat_n(true, n as usize)
        .chain(std::iter::repeat_n(false, leaves))
        .collect();
    word.shuffle(rng);

    // Rotate to start just after the first minimum of the prefix sums.
    let mut height = 0i64;
    let mut min = (0i64, 0usize);
    for (i, &internal) in word.iter().enumerate() {
        height += if internal { p as i64 - 1 } else { -1 };
        if height < min.0 {
            min = (height, i + 1);
        }
    }
    let len = word.len();
    word.rotate_left(min.1 % len);

    let mut labels: Vec<u32> = (1..=n).collect();
    labels.shuffle(rng);

    let mut vertices = Vec::with_capacity(n as usize);
    let mut pos = 0;
    let root = decode_word(&word, &mut pos, p as usize, &mut vertices);
    debug_assert_eq!(pos, word.len());
    for (v, label) in vertices.iter_mut().zip(labels) {
        v.label = label;
    }
    Ok(PAryTree::from_raw(p, root, vertices))
}

/// Decodes the preorder word starting at `pos` into the arena; vertices
/// are appended in preorder.
fn decode_word(
    word: &[bool],
    pos: &mut usize,
    p: usize,
    out: &mut Vec<Vertex>,
) -> Option<VertexId> {
    let internal = word[*pos];
    *pos += 1;
    if !internal {
        return None;
    }
    let id = out.len();
    out.push(Vertex {
        label: 0,
        slots: Vec::with_capacity(p),
    });
    for _ in 0..p {
        let child = decode_word(word, pos, p, out);
        out[id].slots.push(child);
    }
    Some(id)
}

/// An unreduced fraction of two counts, printed as `numer/denom`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ratio {
    pub numer: Nat,
    pub denom: Nat,
}

impl Ratio {
    pub fn to_f64(&self) -> f64 {
        let n = self.numer.to_f64().unwrap_or(f64::INFINITY);
        let d = self.denom.to_f64().unwrap_or(f64::INFINITY);
        n / d
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampleReport {
    pub arity: u32,
    pub size: u32,
    pub trials: u64,
    pub seed: u64,
    /// Observed count per MD size `k` in `1..=size`.
    pub observed: BTreeMap<usize, u64>,
    /// `t(n,k) / |T^(p)_n|` per `k`.
    pub expected: BTreeMap<usize, Ratio>,
    pub chi_square: f64,
    /// Cells with positive expectation, minus one.
    pub degrees_of_freedom: usize,
    pub p_value: f64,
}

/// Samples `trials` trees and compares their MD sizes with the exact
/// distribution.
pub fn sample_md_distribution(p: u32, n: u32, trials: u64, seed: u64) -> Result<SampleReport> {
    check_arity(p)?;
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    let total = labeled_tree_count(p, n as u64)?;
    let mut counter = Counter::new(p)?;
    let expected: BTreeMap<usize, Ratio> = (1..=n as usize)
        .map(|k| {
            Ok((
                k,
                Ratio {
                    numer: counter.t(n as i64, k as i64)?,
                    denom: total.clone(),
                },
            ))
        })
        .collect::<Result<_>>()?;
    debug_assert!(n == 0 || expected.values().map(|r| &r.numer).sum::<Nat>() == total);

    let mut observed: BTreeMap<usize, u64> = (1..=n as usize).map(|k| (k, 0)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let tree = sample_tree_with(p, n, &mut rng)?;
        if tree.is_empty() {
            continue;
        }
        *observed.entry(tree.md_size()?).or_default() += 1;
    }

    let cells: Vec<(u64, f64)> = expected
        .iter()
        .map(|(k, r)| (observed[k], r.to_f64()))
        .collect();
    let (chi_square, degrees_of_freedom) = chi_square_statistic(&cells, trials);
    Ok(SampleReport {
        arity: p,
        size: n,
        trials,
        seed,
        observed,
        expected,
        chi_square,
        degrees_of_freedom,
        p_value: chi_square_p_value(chi_square, degrees_of_freedom),
    })
}

/// Pearson statistic over `(observed, expected probability)` cells.
/// Returns the statistic and the degrees of freedom (positive cells - 1).
/// An observation in a zero-probability cell gives an infinite statistic.
pub fn chi_square_statistic(cells: &[(u64, f64)], trials: u64) -> (f64, usize) {
    let mut stat = 0.0;
    let mut positive = 0usize;
    for &(obs, prob) in cells {
        if prob > 0.0 {
            positive += 1;
            let exp = prob * trials as f64;
            let diff = obs as f64 - exp;
            stat += diff * diff / exp;
        } else if obs > 0 {
            stat = f64::INFINITY;
        }
    }
    (stat, positive.saturating_sub(1))
}

pub fn chi_square_p_value(stat: f64, df: usize) -> f64 {
    if df == 0 {
        return if stat.is_zero() { 1.0 } else { 0.0 };
    }
    let dist = ChiSquared::new(df as f64).expect("positive degrees of freedom");
    1.0 - dist.cdf(stat)
}

/// Upper `alpha` critical value of the chi-square distribution.
pub fn chi_square_critical(df: usize, alpha: f64) -> f64 {
    let dist = ChiSquared::new(df as f64).expect("positive degrees of freedom");
    dist.inverse_cdf(1.0 - alpha)
}
