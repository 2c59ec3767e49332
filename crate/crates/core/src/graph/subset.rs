use std::fmt;

use fixedbitset::FixedBitSet;

use super::EdgeId;

/// A set of edge ids of one host graph.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct EdgeSubset(FixedBitSet);

impl EdgeSubset {
    pub fn empty(m: usize) -> Self {
        EdgeSubset(FixedBitSet::with_capacity(m))
    }

    pub fn full(m: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(m);
        bits.insert_range(..);
        EdgeSubset(bits)
    }

    pub fn from_ids<I: IntoIterator<Item = EdgeId>>(m: usize, ids: I) -> Self {
        let mut s = Self::empty(m);
        for e in ids {
            s.insert(e);
        }
        s
    }

    /// Size of the id universe, i.e. the host's edge count.
    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.contains(e.0)
    }

    pub fn insert(&mut self, e: EdgeId) {
        self.0.insert(e.0);
    }

    pub fn remove(&mut self, e: EdgeId) {
        self.0.set(e.0, false);
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.0.ones().map(EdgeId)
    }

    pub fn to_vec(&self) -> Vec<EdgeId> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<EdgeId> {
        self.0.minimum().map(EdgeId)
    }

    pub fn union_with(&mut self, other: &EdgeSubset) {
        self.0.union_with(&other.0);
    }

    pub fn difference_with(&mut self, other: &EdgeSubset) {
        self.0.difference_with(&other.0);
    }

    pub fn intersect_with(&mut self, other: &EdgeSubset) {
        self.0.intersect_with(&other.0);
    }

    pub fn union(&self, other: &EdgeSubset) -> EdgeSubset {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn difference(&self, other: &EdgeSubset) -> EdgeSubset {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn intersection(&self, other: &EdgeSubset) -> EdgeSubset {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn is_disjoint(&self, other: &EdgeSubset) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn is_subset(&self, other: &EdgeSubset) -> bool {
        self.0.is_subset(&other.0)
    }
}

impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.ones()).finish()
    }
}
