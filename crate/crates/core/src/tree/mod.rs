//! Labeled p-ary trees, the maximal decreasing subtree, and the
//! decomposition of a tree into its MD-plus-increasing-leaves part and the
//! forest hanging below it.
//!
//! A [`PAryTree`] is stored as an arena of vertices. Every vertex owns
//! exactly `p` positioned slots; slot position is part of the tree's
//! identity, so equality and hashing are structural and ignore the arena
//! layout.

mod decompose;
mod forest;
mod text;

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::exact::check_arity;

pub use decompose::{Attachment, Decomposition};
pub use forest::Forest;

/// Index of a vertex inside a tree's arena.
pub type VertexId = usize;

#[derive(Debug, Clone)]
pub struct Vertex {
    pub label: u32,
    pub slots: Vec<Option<VertexId>>,
}

/// A labeled p-ary tree, possibly empty.
#[derive(Debug, Clone)]
pub struct PAryTree {
    arity: u32,
    root: Option<VertexId>,
    vertices: Vec<Vertex>,
}

/// A single violated invariant reported by [`PAryTree::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnostic {
    InvalidArity(u32),
    ZeroLabel { vertex: VertexId },
    DuplicateLabel(u32),
    SlotCount { vertex: VertexId, found: usize },
    DanglingChild { vertex: VertexId, child: VertexId },
    RootOutOfRange(VertexId),
    RootHasParent,
    MultipleParents { vertex: VertexId },
    Unreachable { vertex: VertexId },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::InvalidArity(p) => write!(f, "arity {p} is below 2"),
            Diagnostic::ZeroLabel { vertex } => write!(f, "vertex #{vertex} has label 0"),
            Diagnostic::DuplicateLabel(l) => write!(f, "label {l} is used more than once"),
            Diagnostic::SlotCount { vertex, found } => {
                write!(f, "vertex #{vertex} has {found} slots")
            }
            Diagnostic::DanglingChild { vertex, child } => {
                write!(f, "vertex #{vertex} points at missing vertex #{child}")
            }
            Diagnostic::RootOutOfRange(r) => write!(f, "root #{r} is not a vertex"),
            Diagnostic::RootHasParent => write!(f, "root is referenced by a slot"),
            Diagnostic::MultipleParents { vertex } => {
                write!(f, "vertex #{vertex} is referenced by more than one slot")
            }
            Diagnostic::Unreachable { vertex } => {
                write!(f, "vertex #{vertex} is not reachable from the root")
            }
        }
    }
}

impl PAryTree {
    pub fn empty(arity: u32) -> Self {
        PAryTree {
            arity,
            root: None,
            vertices: Vec::new(),
        }
    }

    pub fn leaf(arity: u32, label: u32) -> Self {
        PAryTree {
            arity,
            root: Some(0),
            vertices: vec![Vertex {
                label,
                slots: vec![None; arity as usize],
            }],
        }
    }

    /// Builds a tree with root `label` whose slots hold `children` in order;
    /// empty trees stand for empty slots. The arity is `children.len()`.
    pub fn node(label: u32, children: Vec<PAryTree>) -> Result<Self> {
        let arity = children.len() as u32;
        check_arity(arity)?;
        let mut out = PAryTree::empty(arity);
        out.vertices.push(Vertex {
            label,
            slots: Vec::with_capacity(children.len()),
        });
        out.root = Some(0);
        for child in &children {
            if child.arity != arity && !child.is_empty() {
                return Err(Error::InvalidTree(vec![Diagnostic::SlotCount {
                    vertex: 0,
                    found: child.arity as usize,
                }]));
            }
            let slot = child.root.map(|r| child.copy_into(r, &mut out.vertices));
            out.vertices[0].slots.push(slot);
        }
        out.ensure_valid()?;
        Ok(out)
    }

    /// Assembles a tree from raw arena parts without checking anything.
    /// Use [`PAryTree::validate`] before trusting the result.
    pub fn from_raw(arity: u32, root: Option<VertexId>, vertices: Vec<Vertex>) -> Self {
        PAryTree {
            arity,
            root,
            vertices,
        }
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    pub fn is_empty(&self) -> bool {
        self.root.is_none()
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        if self.root.is_none() {
            0
        } else {
            self.vertices.len()
        }
    }

    pub fn root(&self) -> Option<VertexId> {
        self.root
    }

    pub fn root_label(&self) -> Option<u32> {
        self.root.map(|r| self.vertices[r].label)
    }

    pub fn label(&self, v: VertexId) -> u32 {
        self.vertices[v].label
    }

    pub fn slots(&self, v: VertexId) -> &[Option<VertexId>] {
        &self.vertices[v].slots
    }

    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.vertices[v].slots.iter().all(Option::is_none)
    }

    /// Vertices in preorder (root, then slot 0 subtree, slot 1 subtree, ...).
    pub fn preorder(&self) -> Vec<VertexId> {
        let mut out = Vec::with_capacity(self.vertices.len());
        let mut stack: Vec<VertexId> = self.root.into_iter().collect();
        while let Some(v) = stack.pop() {
            out.push(v);
            stack.extend(self.vertices[v].slots.iter().rev().flatten());
        }
        out
    }

    pub fn labels(&self) -> BTreeSet<u32> {
        self.preorder().into_iter().map(|v| self.label(v)).collect()
    }

    /// Whether the label set is exactly `{1, ..., len}`.
    pub fn has_standard_labels(&self) -> bool {
        let labels = self.labels();
        labels.len() == self.len() && labels.iter().copied().eq(1..=self.len() as u32)
    }

    pub fn find(&self, label: u32) -> Option<VertexId> {
        self.preorder()
            .into_iter()
            .find(|&v| self.label(v) == label)
    }

    /// Copy of the subtree rooted at `v`.
    pub fn subtree(&self, v: VertexId) -> PAryTree {
        let mut vertices = Vec::new();
        self.copy_into(v, &mut vertices);
        PAryTree::from_raw(self.arity, Some(0), vertices)
    }

    /// Checks every structural invariant and returns the violations found.
    pub fn validate(&self) -> Vec<Diagnostic> {
        let mut diags = Vec::new();
        if self.arity < 2 {
            diags.push(Diagnostic::InvalidArity(self.arity));
        }
        let Some(root) = self.root else {
            return diags;
        };
        let n = self.vertices.len();
        if root >= n {
            diags.push(Diagnostic::RootOutOfRange(root));
            return diags;
        }
        let mut parents = vec![0usize; n];
        let mut seen = HashSet::new();
        for (v, vx) in self.vertices.iter().enumerate() {
            if vx.label == 0 {
                diags.push(Diagnostic::ZeroLabel { vertex: v });
            } else if !seen.insert(vx.label) {
                diags.push(Diagnostic::DuplicateLabel(vx.label));
            }
            if vx.slots.len() != self.arity as usize {
                diags.push(Diagnostic::SlotCount {
                    vertex: v,
                    found: vx.slots.len(),
                });
            }
            for &c in vx.slots.iter().flatten() {
                if c >= n {
                    diags.push(Diagnostic::DanglingChild {
                        vertex: v,
                        child: c,
                    });
                } else {
                    parents[c] += 1;
                }
            }
        }
        if parents[root] > 0 {
            diags.push(Diagnostic::RootHasParent);
        }
        for (v, &count) in parents.iter().enumerate() {
            if count > 1 {
                diags.push(Diagnostic::MultipleParents { vertex: v });
            }
        }
        // With single parents and a parentless root, reachability rules out cycles.
        let mut reached = vec![false; n];
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            if std::mem::replace(&mut reached[v], true) {
                continue;
            }
            stack.extend(self.vertices[v].slots.iter().flatten().filter(|&&c| c < n));
        }
        for (v, ok) in reached.iter().enumerate() {
            if !ok {
                diags.push(Diagnostic::Unreachable { vertex: v });
            }
        }
        diags
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub(crate) fn ensure_valid(&self) -> Result<()> {
        let diags = self.validate();
        if diags.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidTree(diags))
        }
    }

    /// Membership mask of the maximal decreasing subtree, indexed by vertex.
    pub fn md_mask(&self) -> Result<Vec<bool>> {
        let root = self.root.ok_or(Error::EmptyTree)?;
        let mut mask = vec![false; self.vertices.len()];
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            mask[v] = true;
            let label = self.vertices[v].label;
            stack.extend(
                self.vertices[v]
                    .slots
                    .iter()
                    .flatten()
                    .filter(|&&c| self.vertices[c].label < label),
            );
        }
        Ok(mask)
    }

    /// The maximal subtree containing the root in which every edge goes
    /// from a larger label to a smaller one. Slot positions are preserved.
    pub fn md_subtree(&self) -> Result<PAryTree> {
        let mask = self.md_mask()?;
        Ok(self.project(|v| if mask[v] { Keep::Full } else { Keep::Drop }))
    }

    pub fn md_size(&self) -> Result<usize> {
        Ok(self.md_mask()?.into_iter().filter(|&b| b).count())
    }

    /// Whether every vertex outside the MD subtree is a leaf hanging off it,
    /// i.e. the tree is a member of the y-family.
    pub fn is_md_with_increasing_leaves(&self) -> Result<bool> {
        let mask = self.md_mask()?;
        Ok(self
            .preorder()
            .into_iter()
            .all(|v| mask[v] || self.is_leaf(v)))
    }

    /// Copies the subtree at `v` to the end of `out`, returning its new index.
    fn copy_into(&self, v: VertexId, out: &mut Vec<Vertex>) -> VertexId {
        self.copy_with(v, out, &|_| None)
    }

    /// Like `copy_into`, but whenever `graft` returns a tree for a vertex's
    /// label, that tree is copied in place of the vertex and its subtree.
    fn copy_with<'a>(
        &self,
        v: VertexId,
        out: &mut Vec<Vertex>,
        graft: &dyn Fn(u32) -> Option<&'a PAryTree>,
    ) -> VertexId {
        let label = self.vertices[v].label;
        if let Some(g) = graft(label) {
            let r = g.root.expect("grafted trees are non-empty");
            return g.copy_into(r, out);
        }
        let id = out.len();
        out.push(Vertex {
            label,
            slots: Vec::new(),
        });
        let slots = self.vertices[v]
            .slots
            .iter()
            .map(|c| c.map(|c| self.copy_with(c, out, graft)))
            .collect();
        out[id].slots = slots;
        id
    }

    /// Rebuilds the tree keeping the vertices selected by `keep`, which is
    /// consulted for every child of a fully kept vertex.
    fn project(&self, keep: impl Fn(VertexId) -> Keep) -> PAryTree {
        fn go(
            t: &PAryTree,
            v: VertexId,
            keep: &dyn Fn(VertexId) -> Keep,
            out: &mut Vec<Vertex>,
        ) -> VertexId {
            let id = out.len();
            out.push(Vertex {
                label: t.vertices[v].label,
                slots: vec![None; t.arity as usize],
            });
            for (i, c) in t.vertices[v].slots.iter().enumerate() {
                let Some(c) = *c else { continue };
                let slot = match keep(c) {
                    Keep::Full => Some(go(t, c, keep, out)),
                    Keep::Leaf => {
                        out.push(Vertex {
                            label: t.vertices[c].label,
                            slots: vec![None; t.arity as usize],
                        });
                        Some(out.len() - 1)
                    }
                    Keep::Drop => None,
                };
                out[id].slots[i] = slot;
            }
            id
        }
        let Some(root) = self.root else {
            return PAryTree::empty(self.arity);
        };
        let mut out = Vec::new();
        go(self, root, &keep, &mut out);
        PAryTree::from_raw(self.arity, Some(0), out)
    }

    fn eq_at(&self, v: VertexId, other: &PAryTree, w: VertexId) -> bool {
        let (a, b) = (&self.vertices[v], &other.vertices[w]);
        a.label == b.label
            && a.slots.len() == b.slots.len()
            && a.slots.iter().zip(&b.slots).all(|pair| match pair {
                (None, None) => true,
                (Some(c), Some(d)) => self.eq_at(*c, other, *d),
                _ => false,
            })
    }
}

#[derive(Clone, Copy)]
enum Keep {
    Full,
    Leaf,
    Drop,
}

impl PartialEq for PAryTree {
    fn eq(&self, other: &Self) -> bool {
        self.arity == other.arity
            && match (self.root, other.root) {
                (None, None) => true,
                (Some(a), Some(b)) => self.eq_at(a, other, b),
                _ => false,
            }
    }
}

impl Eq for PAryTree {}

impl Hash for PAryTree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.arity.hash(state);
        for v in self.preorder() {
            self.vertices[v].label.hash(state);
            for slot in &self.vertices[v].slots {
                slot.is_some().hash(state);
            }
        }
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::PAryTree;

    /// The 11-vertex ternary tree whose MD subtree is {9,8,2,4,1,3}.
    pub const SAMPLE_TERNARY: &str =
        "(9,(8,_,(1,(7,_,_,_),(10,_,_,_),_),_),(2,_,_,_),(4,_,(3,_,_,_),(6,(11,_,_,_),_,(5,_,_,_))))";

    pub fn sample_ternary() -> PAryTree {
        PAryTree::decode(SAMPLE_TERNARY).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::sample_ternary;
    use super::*;

    #[test]
    fn single_vertex_is_valid() {
        let t = PAryTree::leaf(2, 1);
        assert!(t.is_valid());
        assert_eq!(t.md_size().unwrap(), 1);
        assert_eq!(t.md_subtree().unwrap(), t);
    }

    #[test]
    fn duplicate_label_is_reported() {
        let t = PAryTree::from_raw(
            2,
            Some(0),
            vec![
                Vertex {
                    label: 3,
                    slots: vec![Some(1), None],
                },
                Vertex {
                    label: 3,
                    slots: vec![None, None],
                },
            ],
        );
        assert_eq!(t.validate(), vec![Diagnostic::DuplicateLabel(3)]);
        assert!(PAryTree::node(3, vec![PAryTree::leaf(2, 3), PAryTree::empty(2)]).is_err());
    }

    #[test]
    fn structural_defects_are_reported() {
        let v = |label, slots: Vec<Option<usize>>| Vertex { label, slots };
        let cyc = PAryTree::from_raw(
            2,
            Some(0),
            vec![v(1, vec![Some(1), None]), v(2, vec![Some(0), None])],
        );
        assert!(cyc.validate().contains(&Diagnostic::RootHasParent));

        let shared = PAryTree::from_raw(
            2,
            Some(0),
            vec![v(1, vec![Some(1), Some(1)]), v(2, vec![None, None])],
        );
        assert!(shared
            .validate()
            .contains(&Diagnostic::MultipleParents { vertex: 1 }));

        let orphan = PAryTree::from_raw(
            2,
            Some(0),
            vec![v(1, vec![None, None]), v(2, vec![None, None])],
        );
        assert_eq!(
            orphan.validate(),
            vec![Diagnostic::Unreachable { vertex: 1 }]
        );

        let short = PAryTree::from_raw(3, Some(0), vec![v(1, vec![None])]);
        assert_eq!(
            short.validate(),
            vec![Diagnostic::SlotCount {
                vertex: 0,
                found: 1
            }]
        );

        let zero = PAryTree::from_raw(2, Some(0), vec![v(0, vec![None, Some(7)])]);
        let d = zero.validate();
        assert!(d.contains(&Diagnostic::ZeroLabel { vertex: 0 }));
        assert!(d.contains(&Diagnostic::DanglingChild {
            vertex: 0,
            child: 7
        }));
    }

    #[test]
    fn eleven_vertex_tree_md_subtree() {
        let t = sample_ternary();
        assert!(t.is_valid());
        assert_eq!(t.len(), 11);
        let md = t.md_subtree().unwrap();
        assert_eq!(md.labels(), BTreeSet::from([9, 8, 2, 4, 1, 3]));
        assert_eq!(
            md.encode(),
            "(9,(8,_,(1,_,_,_),_),(2,_,_,_),(4,_,(3,_,_,_),_))"
        );
        assert_eq!(t.md_size().unwrap(), 6);
        assert_eq!(t.md_subtree().unwrap().md_subtree().unwrap(), md);
    }

    #[test]
    fn decreasing_tree_is_its_own_md() {
        let t = PAryTree::decode("(5,(4,_,(1,_,_)),(3,(2,_,_),_))").unwrap();
        assert_eq!(t.md_subtree().unwrap(), t);
        assert_eq!(t.md_size().unwrap(), 5);
    }

    #[test]
    fn minimum_root_with_larger_children_has_md_size_one() {
        let t = PAryTree::decode("(1,(3,(2,_,_),_),(4,_,_))").unwrap();
        assert_eq!(t.md_size().unwrap(), 1);
    }

    #[test]
    fn empty_tree_is_rejected_by_statistics() {
        let t = PAryTree::empty(2);
        assert!(t.is_valid());
        assert_eq!(t.md_size(), Err(Error::EmptyTree));
        assert_eq!(t.md_subtree(), Err(Error::EmptyTree));
    }

    #[test]
    fn slot_position_matters() {
        let left = PAryTree::decode("(2,(1,_,_),_)").unwrap();
        let right = PAryTree::decode("(2,_,(1,_,_))").unwrap();
        assert_ne!(left, right);
        assert_eq!(left.labels(), right.labels());
    }

    #[test]
    fn equality_ignores_arena_layout() {
        let v = |label, slots: Vec<Option<usize>>| Vertex { label, slots };
        let a = PAryTree::from_raw(
            2,
            Some(0),
            vec![v(2, vec![Some(1), None]), v(1, vec![None, None])],
        );
        let b = PAryTree::from_raw(
            2,
            Some(1),
            vec![v(1, vec![None, None]), v(2, vec![Some(0), None])],
        );
        assert_eq!(a, b);
        let hash = |t: &PAryTree| {
            let mut h = std::collections::hash_map::DefaultHasher::new();
            t.hash(&mut h);
            h.finish()
        };
        assert_eq!(hash(&a), hash(&b));
    }
}
