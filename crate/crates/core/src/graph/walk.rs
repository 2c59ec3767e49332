use serde::{Deserialize, Serialize};

use super::{EdgeId, EdgeSubset, MultiGraph, VertexId};
use crate::error::{Error, Result};

/// Follows `edges` from `start`; returns the visited vertex sequence
/// (one longer than `edges`) or `None` if consecutive edges do not chain.
pub(crate) fn trace<F>(ends: F, start: VertexId, edges: &[EdgeId]) -> Option<Vec<VertexId>>
where
    F: Fn(EdgeId) -> (VertexId, VertexId),
{
    let mut seq = Vec::with_capacity(edges.len() + 1);
    seq.push(start);
    let mut cur = start;
    for &e in edges {
        let (a, b) = ends(e);
        cur = if a == cur {
            b
        } else if b == cur {
            a
        } else {
            return None;
        };
        seq.push(cur);
    }
    Some(seq)
}

fn all_distinct(items: &[VertexId], n: usize) -> bool {
    let mut seen = vec![false; n];
    items.iter().all(|v| !std::mem::replace(&mut seen[v.0], true))
}

fn edges_distinct(edges: &[EdgeId]) -> bool {
    let mut sorted = edges.to_vec();
    sorted.sort();
    sorted.windows(2).all(|w| w[0] != w[1])
}

/// A path given by its start vertex and edge sequence. The end may equal the
/// start (a closed path) only when the path has edges; otherwise all
/// vertices are distinct.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    start: VertexId,
    end: VertexId,
    edges: Vec<EdgeId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Path {
        Path { start: v, end: v, edges: Vec::new() }
    }

    pub fn new(g: &MultiGraph, start: VertexId, edges: Vec<EdgeId>) -> Result<Path> {
        let seq = trace(|e| g.endpoints(e), start, &edges)
            .ok_or_else(|| Error::invalid(format!("edges {edges:?} do not form a walk from {start}")))?;
        let end = *seq.last().unwrap();
        let body = if end == start && !edges.is_empty() { &seq[..seq.len() - 1] } else { &seq[..] };
        if !all_distinct(body, g.vertex_count()) || !edges_distinct(&edges) {
            return Err(Error::invalid(format!("walk {edges:?} from {start} repeats a vertex or edge")));
        }
        Ok(Path { start, end, edges })
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    pub fn end(&self) -> VertexId {
        self.end
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn into_edges(self) -> Vec<EdgeId> {
        self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        !self.edges.is_empty() && self.start == self.end
    }

    pub fn vertices(&self, g: &MultiGraph) -> Vec<VertexId> {
        trace(|e| g.endpoints(e), self.start, &self.edges).expect("path invariant")
    }

    pub fn reversed(&self) -> Path {
        let mut edges = self.edges.clone();
        edges.reverse();
        Path { start: self.end, end: self.start, edges }
    }

    pub fn edge_set(&self, m: usize) -> EdgeSubset {
        EdgeSubset::from_ids(m, self.edges.iter().copied())
    }
}

/// A cycle as a cyclically ordered edge sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle {
    edges: Vec<EdgeId>,
}

impl Cycle {
    /// Validates that `edges` is a closed walk without repeated vertices.
    pub fn new(g: &MultiGraph, edges: Vec<EdgeId>) -> Result<Cycle> {
        Self::with_ends(|e| g.endpoints(e), g.vertex_count(), edges)
    }

    pub(crate) fn with_ends<F>(ends: F, n: usize, edges: Vec<EdgeId>) -> Result<Cycle>
    where
        F: Fn(EdgeId) -> (VertexId, VertexId),
    {
        if Self::start_vertex(&ends, n, &edges).is_some() {
            Ok(Cycle { edges })
        } else {
            Err(Error::invalid(format!("edges {edges:?} do not form a cycle")))
        }
    }

    fn start_vertex<F>(ends: &F, n: usize, edges: &[EdgeId]) -> Option<VertexId>
    where
        F: Fn(EdgeId) -> (VertexId, VertexId),
    {
        let first = *edges.first()?;
        if !edges_distinct(edges) {
            return None;
        }
        let (a, b) = ends(first);
        for x in [a, b] {
            if let Some(seq) = trace(ends, x, edges) {
                if *seq.last().unwrap() == x && all_distinct(&seq[..seq.len() - 1], n) {
                    return Some(x);
                }
            }
        }
        None
    }

    /// Builds a cycle from ids that are not yet known to be valid; used for
    /// decoding certificates before verification.
    pub fn unchecked(edges: Vec<EdgeId>) -> Cycle {
        Cycle { edges }
    }

    pub fn is_valid_in(&self, g: &MultiGraph) -> bool {
        self.edges.iter().all(|e| e.0 < g.edge_count()) && Self::start_vertex(&|e| g.endpoints(e), g.vertex_count(), &self.edges).is_some()
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn into_edges(self) -> Vec<EdgeId> {
        self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertex sequence; entry `i` is where edge `i` is entered from.
    pub fn vertices(&self, g: &MultiGraph) -> Vec<VertexId> {
        self.vertices_with(|e| g.endpoints(e), g.vertex_count())
    }

    pub(crate) fn vertices_with<F>(&self, ends: F, n: usize) -> Vec<VertexId>
    where
        F: Fn(EdgeId) -> (VertexId, VertexId),
    {
        let start = Self::start_vertex(&ends, n, &self.edges).expect("cycle invariant");
        let mut seq = trace(ends, start, &self.edges).unwrap();
        seq.pop();
        seq
    }

    pub fn edge_set(&self, m: usize) -> EdgeSubset {
        EdgeSubset::from_ids(m, self.edges.iter().copied())
    }

    pub fn sorted_ids(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = self.edges.iter().map(|e| e.0).collect();
        ids.sort_unstable();
        ids
    }
}
