use std::collections::BTreeMap;

use super::{Forest, PAryTree};
use crate::error::{Error, Result};

/// Where a forest component was cut from: the slot `slot` of the MD vertex
/// labeled `parent`, which held the increasing leaf `root`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Attachment {
    pub root: u32,
    pub parent: u32,
    pub slot: usize,
}

/// A tree split into the MD subtree together with its increasing leaves
/// (`y_part`) and the forest induced on the vertices outside the MD subtree
/// (`z_part`). Each forest root is one of the increasing leaves of `y_part`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub y_part: PAryTree,
    pub z_part: Forest,
    /// Sorted by root label, in step with `z_part.components()`.
    pub attachments: Vec<Attachment>,
}

impl PAryTree {
    pub fn decompose(&self) -> Result<Decomposition> {
        let mask = self.md_mask()?;
        let y_part = self.project(|v| {
            if mask[v] {
                super::Keep::Full
            } else {
                super::Keep::Leaf
            }
        });
        let mut components = Vec::new();
        let mut attachments = Vec::new();
        for v in self.preorder().into_iter().filter(|&v| mask[v]) {
            for (slot, c) in self.slots(v).iter().enumerate() {
                let Some(c) = *c else { continue };
                if !mask[c] {
                    components.push(self.subtree(c));
                    attachments.push(Attachment {
                        root: self.label(c),
                        parent: self.label(v),
                        slot,
                    });
                }
            }
        }
        attachments.sort();
        let z_part = Forest::new(self.arity, components)?;
        Ok(Decomposition {
            y_part,
            z_part,
            attachments,
        })
    }
}

impl Decomposition {
    /// Number of vertices in the MD subtree.
    pub fn md_size(&self) -> usize {
        self.y_part.len() - self.z_part.len()
    }

    /// Grafts every forest component back onto the increasing leaf it was
    /// cut from.
    pub fn recompose(&self) -> Result<PAryTree> {
        let y = &self.y_part;
        let root = y.root().ok_or(Error::EmptyTree)?;
        let by_root: BTreeMap<u32, &Attachment> =
            self.attachments.iter().map(|a| (a.root, a)).collect();
        if by_root.len() != self.attachments.len() {
            let dup = self
                .attachments
                .windows(2)
                .find(|w| w[0].root == w[1].root)
                .map_or(0, |w| w[0].root);
            return Err(Error::AttachmentMismatch { root: dup });
        }
        for comp in self.z_part.components() {
            let r = comp.root_label().expect("forest components are non-empty");
            let a = by_root
                .get(&r)
                .ok_or(Error::AttachmentMismatch { root: r })?;
            let fits = y.find(a.parent).is_some_and(|pv| {
                y.slots(pv)
                    .get(a.slot)
                    .copied()
                    .flatten()
                    .is_some_and(|lv| y.label(lv) == r && y.is_leaf(lv) && r > a.parent)
            });
            if !fits {
                return Err(Error::AttachmentMismatch { root: r });
            }
        }
        if let Some(a) = self
            .attachments
            .iter()
            .find(|a| self.z_part.component_rooted_at(a.root).is_none())
        {
            return Err(Error::AttachmentMismatch { root: a.root });
        }
        let mut vertices = Vec::with_capacity(y.len() + self.z_part.vertex_count());
        y.copy_with(root, &mut vertices, &|label| {
            self.z_part.component_rooted_at(label)
        });
        let tree = PAryTree::from_raw(y.arity(), Some(0), vertices);
        tree.ensure_valid()?;
        Ok(tree)
    }
}
