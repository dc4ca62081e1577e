use std::fmt;

use crate::error::{Error, Result};

/// Immutable set of vertex ids with constant-time membership.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet {
    mask: Vec<bool>,
    members: Vec<usize>,
}

impl VertexSet {
    /// Builds a set over the universe `0..universe`. Duplicate ids collapse.
    pub fn new(universe: usize, ids: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = vec![false; universe];
        let mut members = Vec::new();
        for v in ids {
            if v >= universe {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: universe,
                });
            }
            if !mask[v] {
                mask[v] = true;
                members.push(v);
            }
        }
        members.sort_unstable();
        Ok(Self { mask, members })
    }

    pub fn from_mask(mask: Vec<bool>) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(v, &m)| m.then_some(v))
            .collect();
        Self { mask, members }
    }

    pub fn empty(universe: usize) -> Self {
        Self {
            mask: vec![false; universe],
            members: Vec::new(),
        }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.mask.get(v).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn universe(&self) -> usize {
        self.mask.len()
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub(crate) fn mask(&self) -> &[bool] {
        &self.mask
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.members).finish()
    }
}
