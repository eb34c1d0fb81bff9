//! Exhaustive generation of labeled p-ary trees and forests.
//!
//! This is the brute-force oracle for the counting formulas. A tree on a
//! label set is produced by picking any label as the root, distributing
//! the remaining labels over the `p` ordered slots, and recursing into each
//! slot. The generators are lazy odometers: only the current tree is held
//! in memory, and each call to `next` advances the rightmost digit that can
//! still move.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::sync::atomic::{AtomicU64, Ordering};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{check_arity, Nat};
use crate::tree::{Diagnostic, Forest, PAryTree, Vertex, VertexId};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Caps the number of objects the generators may produce.
///
/// The counter is shared: several streams charged against the same budget
/// draw from one pool, and it is safe to charge from multiple threads.
#[derive(Debug)]
pub struct EnumerationBudget {
    max_trees: u64,
    used: AtomicU64,
}

impl EnumerationBudget {
    pub fn new(max_trees: u64) -> Self {
        EnumerationBudget {
            max_trees,
            used: AtomicU64::new(0),
        }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX)
    }

    pub fn max_trees(&self) -> u64 {
        self.max_trees
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    fn charge(&self) -> Result<()> {
        let prev = self.used.fetch_add(1, Ordering::Relaxed);
        if prev >= self.max_trees {
            Err(Error::BudgetExceeded {
                cap: self.max_trees,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        Self::new(DEFAULT_BUDGET)
    }
}

/// Generator over all trees on `labels` whose root is drawn from `roots`.
#[derive(Debug, Clone)]
struct TreeGen {
    arity: usize,
    labels: Vec<u32>,
    roots: Vec<u32>,
    root_pos: usize,
    /// Non-root labels, and the slot each one is currently assigned to.
    rest: Vec<u32>,
    assign: Vec<usize>,
    children: Vec<TreeGen>,
}

impl TreeGen {
    fn new(arity: usize, labels: Vec<u32>, roots: Vec<u32>) -> Self {
        let mut gen = TreeGen {
            arity,
            labels,
            roots,
            root_pos: 0,
            rest: Vec::new(),
            assign: Vec::new(),
            children: Vec::new(),
        };
        if !gen.labels.is_empty() && !gen.roots.is_empty() {
            gen.reset_root();
        }
        gen
    }

    fn any_root(arity: usize, labels: Vec<u32>) -> Self {
        let roots = labels.clone();
        Self::new(arity, labels, roots)
    }

    fn reset_root(&mut self) {
        let root = self.roots[self.root_pos];
        self.rest = self.labels.iter().copied().filter(|&l| l != root).collect();
        self.assign = vec![0; self.rest.len()];
        self.reset_children();
    }

    fn reset_children(&mut self) {
        let mut parts = vec![Vec::new(); self.arity];
        for (&l, &s) in self.rest.iter().zip(&self.assign) {
            parts[s].push(l);
        }
        self.children = parts
            .into_iter()
            .map(|part| TreeGen::any_root(self.arity, part))
            .collect();
    }

    /// Whether the generator has at least one tree.
    fn is_inhabited(&self) -> bool {
        self.labels.is_empty() || !self.roots.is_empty()
    }

    fn advance(&mut self) -> bool {
        if self.labels.is_empty() {
            return false;
        }
        for i in (0..self.children.len()).rev() {
            if self.children[i].advance() {
                for j in i + 1..self.children.len() {
                    let labels = std::mem::take(&mut self.children[j].labels);
                    self.children[j] = TreeGen::any_root(self.arity, labels);
                }
                return true;
            }
        }
        if increment(&mut self.assign, self.arity) {
            self.reset_children();
            return true;
        }
        self.root_pos += 1;
        if self.root_pos < self.roots.len() {
            self.reset_root();
            return true;
        }
        false
    }

    fn build(&self, out: &mut Vec<Vertex>) -> Option<VertexId> {
        if self.labels.is_empty() {
            return None;
        }
        let id = out.len();
        out.push(Vertex {
            label: self.roots[self.root_pos],
            slots: Vec::new(),
        });
        let slots = self.children.iter().map(|c| c.build(out)).collect();
        out[id].slots = slots;
        Some(id)
    }

    fn tree(&self) -> PAryTree {
        let mut vertices = Vec::with_capacity(self.labels.len());
        let root = self.build(&mut vertices);
        PAryTree::from_raw(self.arity as u32, root, vertices)
    }
}

/// Base-`radix` counter increment; returns false on wrap-around.
fn increment(digits: &mut [usize], radix: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

/// Next k-combination of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn check_labels(labels: &[u32]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for &l in labels {
        if l == 0 {
            return Err(Error::InvalidTree(vec![Diagnostic::ZeroLabel {
                vertex: 0,
            }]));
        }
        if !seen.insert(l) {
            return Err(Error::InvalidTree(vec![Diagnostic::DuplicateLabel(l)]));
        }
    }
    Ok(())
}

fn standard_labels(n: u32) -> Vec<u32> {
    (1..=n).collect()
}

/// Lazy stream of every p-ary tree on a label set, each exactly once.
#[derive(Debug)]
pub struct Trees<'b> {
    gen: TreeGen,
    started: bool,
    finished: bool,
    budget: &'b EnumerationBudget,
}

impl Iterator for Trees<'_> {
    type Item = Result<PAryTree>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.finished {
            return None;
        }
        if self.started && !self.gen.advance() {
            self.finished = true;
            return None;
        }
        self.started = true;
        if let Err(e) = self.budget.charge() {
            self.finished = true;
            return Some(Err(e));
        }
        Some(Ok(self.gen.tree()))
    }
}

/// Streams every p-ary tree on `labels` in a fixed order. For an empty
/// label set the stream holds exactly the empty tree.
pub fn enumerate_trees<'b>(
    p: u32,
    labels: &[u32],
    budget: &'b EnumerationBudget,
) -> Result<Trees<'b>> {
    check_arity(p)?;
    check_labels(labels)?;
    Ok(Trees {
        gen: TreeGen::any_root(p as usize, labels.to_vec()),
        started: false,
        finished: false,
        budget,
    })
}

/// Lazy stream of forests with a fixed number of components.
#[derive(Debug)]
pub struct Forests<'b> {
    arity: usize,
    labels: Vec<u32>,
    /// Indices into `labels` of the current root set, ascending.
    root_idx: Vec<usize>,
    rest: Vec<u32>,
    assign: Vec<usize>,
    comps: Vec<TreeGen>,
    started: bool,
    finished: bool,
    budget: &'b EnumerationBudget,
}

impl Forests<'_> {
    fn reset_roots(&mut self) {
        let roots: BTreeSet<u32> = self.root_idx.iter().map(|&i| self.labels[i]).collect();
        self.rest = self
            .labels
            .iter()
            .copied()
            .filter(|l| !roots.contains(l))
            .collect();
        self.assign = vec![0; self.rest.len()];
        self.reset_comps();
    }

    fn reset_comps(&mut self) {
        let k = self.root_idx.len();
        let mut parts: Vec<Vec<u32>> = self
            .root_idx
            .iter()
            .map(|&i| vec![self.labels[i]])
            .collect();
        for (&l, &c) in self.rest.iter().zip(&self.assign) {
            parts[c].push(l);
        }
        debug_assert_eq!(parts.len(), k);
        self.comps = parts
            .into_iter()
            .map(|part| {
                let root = part[0];
                TreeGen::new(self.arity, part, vec![root])
            })
            .collect();
    }

    fn advance(&mut self) -> bool {
        for i in (0..self.comps.len()).rev() {
            if self.comps[i].advance() {
                for j in i + 1..self.comps.len() {
                    let labels = std::mem::take(&mut self.comps[j].labels);
                    let root = labels[0];
                    self.comps[j] = TreeGen::new(self.arity, labels, vec![root]);
                }
                return true;
            }
        }
        if increment(&mut self.assign, self.root_idx.len()) {
            self.reset_comps();
            return true;
        }
        if next_combination(&mut self.root_idx, self.labels.len()) {
            self.reset_roots();
            return true;
        }
        false
    }

    fn forest(&self) -> Forest {
        let comps = self.comps.iter().map(TreeGen::tree).collect();
        Forest::new(self.arity as u32, comps).expect("generated components are disjoint")
    }
}

impl Iterator for Forests<'_> {
    type Item = Result<Forest>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.finished {
            return None;
        }
        if self.started && !self.advance() {
            self.finished = true;
            return None;
        }
        self.started = true;
        if let Err(e) = self.budget.charge() {
            self.finished = true;
            return Some(Err(e));
        }
        Some(Ok(self.forest()))
    }
}

/// Streams every forest of `k` p-ary trees whose label sets partition
/// `labels`. Root sets are chosen as ascending k-subsets, so each unordered
/// forest appears once.
pub fn enumerate_forests<'b>(
    p: u32,
    labels: &[u32],
    k: usize,
    budget: &'b EnumerationBudget,
) -> Result<Forests<'b>> {
    check_arity(p)?;
    check_labels(labels)?;
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    let n = sorted.len();
    // A forest needs at least one root when there are labels to place.
    let finished = k > n || (k == 0 && n > 0);
    let mut forests = Forests {
        arity: p as usize,
        labels: sorted,
        root_idx: (0..k).collect(),
        rest: Vec::new(),
        assign: Vec::new(),
        comps: Vec::new(),
        started: false,
        finished,
        budget,
    };
    if !finished {
        forests.reset_roots();
        debug_assert!(forests.comps.iter().all(TreeGen::is_inhabited));
    }
    Ok(forests)
}

/// Exact distribution of MD-subtree sizes over a family of trees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MdHistogram {
    pub arity: u32,
    pub size: u32,
    /// Count per MD size `k`, for every `1 <= k <= size`.
    pub counts: BTreeMap<usize, Nat>,
}

impl MdHistogram {
    fn zeroed(arity: u32, size: u32) -> Self {
        MdHistogram {
            arity,
            size,
            counts: (1..=size as usize).map(|k| (k, Nat::zero())).collect(),
        }
    }

    pub fn get(&self, k: usize) -> Nat {
        self.counts.get(&k).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> Nat {
        self.counts.values().sum()
    }

    /// Adds another histogram over a disjoint sub-stream.
    pub fn merge(&mut self, other: &MdHistogram) {
        for (k, v) in &other.counts {
            *self.counts.entry(*k).or_default() += v;
        }
    }
}

/// Tabulates `md_size` over every tree of `T^(p)_n`.
pub fn md_histogram(p: u32, n: u32, budget: &EnumerationBudget) -> Result<MdHistogram> {
    let mut hist = MdHistogram::zeroed(p, n);
    for tree in enumerate_trees(p, &standard_labels(n), budget)? {
        let tree = tree?;
        if n == 0 {
            continue;
        }
        *hist.counts.entry(tree.md_size()?).or_default() += 1u32;
    }
    Ok(hist)
}

/// Per-k counts of trees on `[n]` in which every vertex outside the MD
/// subtree is a leaf.
pub fn y_histogram(p: u32, n: u32, budget: &EnumerationBudget) -> Result<MdHistogram> {
    let mut hist = MdHistogram::zeroed(p, n);
    for tree in enumerate_trees(p, &standard_labels(n), budget)? {
        let tree = tree?;
        if n == 0 {
            continue;
        }
        if tree.is_md_with_increasing_leaves()? {
            *hist.counts.entry(tree.md_size()?).or_default() += 1u32;
        }
    }
    Ok(hist)
}

/// Brute-force `y(n,k)`: trees on `[n]` with MD size `k` whose non-MD
/// vertices are all leaves.
pub fn y_oracle(p: u32, n: u32, k: u32, budget: &EnumerationBudget) -> Result<Nat> {
    if n == 0 {
        check_arity(p)?;
        return Ok(if k == 0 { Nat::one() } else { Nat::zero() });
    }
    Ok(y_histogram(p, n, budget)?.get(k as usize))
}

/// Brute-force `f(n,k)` by exhaustive forest generation.
pub fn forest_oracle(p: u32, n: u32, k: u32, budget: &EnumerationBudget) -> Result<Nat> {
    let mut count = Nat::zero();
    for forest in enumerate_forests(p, &standard_labels(n), k as usize, budget)? {
        forest?;
        count += 1u32;
    }
    Ok(count)
}
