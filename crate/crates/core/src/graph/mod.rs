//! Multigraph storage with stable edge identities, plus views, walks and
//! decompositions built on top of it.

mod decompose;
mod io;
mod subset;
mod suppress;
mod view;
mod walk;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use decompose::{blocks, components};
pub use io::{parse_graph, write_graph};
pub use subset::EdgeSubset;
pub use suppress::{expand_cycle, suppress_degree2, SuppressionMap};
pub use view::Subgraph;
pub use walk::{Cycle, Path};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// Undirected multigraph on vertices `0..n`. Parallel edges and loops are
/// allowed; a loop appears once in its vertex's incidence list but adds 2 to
/// the degree.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiGraph {
    ends: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<EdgeId>>,
}

impl MultiGraph {
    pub fn new(n: usize) -> Self {
        MultiGraph { ends: Vec::new(), adj: vec![Vec::new(); n] }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = MultiGraph::new(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!("edge {u}-{v} out of range for n={n}")));
            }
            g.add_edge(VertexId(u), VertexId(v));
        }
        Ok(g)
    }

    /// Appends an edge and returns its id. Panics if an endpoint is out of range.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> EdgeId {
        assert!(u.0 < self.adj.len() && v.0 < self.adj.len(), "endpoint out of range");
        let e = EdgeId(self.ends.len());
        self.ends.push((u, v));
        self.adj[u.0].push(e);
        if u != v {
            self.adj[v.0].push(e);
        }
        e
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.adj.push(Vec::new());
        VertexId(self.adj.len() - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.ends[e.0]
    }

    /// The endpoint of `e` that is not `v` (or `v` itself for a loop).
    pub fn other(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.ends[e.0];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v, "{e} is not incident with {v}");
            a
        }
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (a, b) = self.ends[e.0];
        a == b
    }

    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.adj[v.0]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.0].iter().map(|&e| if self.is_loop(e) { 2 } else { 1 }).sum()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.adj.len()).map(VertexId)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.ends.len()).map(EdgeId)
    }

    pub fn full(&self) -> Subgraph<'_> {
        Subgraph::new(self, EdgeSubset::full(self.edge_count()))
    }

    pub fn view(&self, edges: EdgeSubset) -> Subgraph<'_> {
        Subgraph::new(self, edges)
    }

    pub fn edge_set<I: IntoIterator<Item = EdgeId>>(&self, ids: I) -> EdgeSubset {
        EdgeSubset::from_ids(self.edge_count(), ids)
    }

    /// Vertex-disjoint union; the vertices and edges of `other` are shifted
    /// past those of `self`.
    pub fn disjoint_union(&self, other: &MultiGraph) -> MultiGraph {
        let shift = self.vertex_count();
        let mut g = self.clone();
        for _ in 0..other.vertex_count() {
            g.add_vertex();
        }
        for &(a, b) in &other.ends {
            g.add_edge(VertexId(a.0 + shift), VertexId(b.0 + shift));
        }
        g
    }
}
