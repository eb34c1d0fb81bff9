use std::collections::BTreeSet;
use std::fmt;

use super::PAryTree;
use crate::error::{Error, Result};

/// An unordered collection of p-ary trees with pairwise-disjoint labels.
///
/// Components are kept sorted by root label, so two forests with the same
/// components in a different order compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Forest {
    arity: u32,
    components: Vec<PAryTree>,
}

impl Forest {
    pub fn new(arity: u32, mut components: Vec<PAryTree>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for c in &components {
            if c.is_empty() {
                return Err(Error::InvalidForest("empty component".into()));
            }
            if c.arity() != arity {
                return Err(Error::InvalidForest(format!(
                    "component arity {} differs from forest arity {arity}",
                    c.arity()
                )));
            }
            c.ensure_valid()?;
            for l in c.labels() {
                if !seen.insert(l) {
                    return Err(Error::InvalidForest(format!("label {l} appears twice")));
                }
            }
        }
        components.sort_by_key(|c| c.root_label());
        Ok(Forest { arity, components })
    }

    pub fn empty(arity: u32) -> Self {
        Forest {
            arity,
            components: Vec::new(),
        }
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    /// Components in ascending root-label order.
    pub fn components(&self) -> &[PAryTree] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn roots(&self) -> Vec<u32> {
        self.components
            .iter()
            .filter_map(PAryTree::root_label)
            .collect()
    }

    pub fn labels(&self) -> BTreeSet<u32> {
        self.components.iter().flat_map(PAryTree::labels).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.components.iter().map(PAryTree::len).sum()
    }

    pub fn component_rooted_at(&self, label: u32) -> Option<&PAryTree> {
        self.components
            .binary_search_by_key(&Some(label), PAryTree::root_label)
            .ok()
            .map(|i| &self.components[i])
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}
