use std::collections::VecDeque;

use super::{EdgeId, EdgeSubset, MultiGraph, VertexId};

/// An edge-induced subgraph of a host graph. Edge and vertex ids are the
/// host's; a vertex belongs to the view iff some active edge touches it.
#[derive(Clone, Debug)]
pub struct Subgraph<'g> {
    host: &'g MultiGraph,
    edges: EdgeSubset,
}

impl<'g> Subgraph<'g> {
    pub fn new(host: &'g MultiGraph, edges: EdgeSubset) -> Self {
        debug_assert_eq!(edges.universe(), host.edge_count());
        Subgraph { host, edges }
    }

    pub fn host(&self) -> &'g MultiGraph {
        self.host
    }

    pub fn edges(&self) -> &EdgeSubset {
        &self.edges
    }

    pub fn into_edges(self) -> EdgeSubset {
        self.edges
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.edges.contains(e)
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter()
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.host.endpoints(e)
    }

    /// Active edges at `v` with their far endpoint, in ascending edge id order.
    pub fn incident(&self, v: VertexId) -> impl Iterator<Item = (EdgeId, VertexId)> + '_ {
        self.host.incident(v).iter().copied().filter(move |&e| self.edges.contains(e)).map(move |e| (e, self.host.other(e, v)))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incident(v).map(|(e, _)| if self.host.is_loop(e) { 2 } else { 1 }).sum()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.incident(v).next().is_some()
    }

    /// Vertex mask over host ids.
    pub fn vertex_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.host.vertex_count()];
        for e in self.edges.iter() {
            let (a, b) = self.host.endpoints(e);
            mask[a.0] = true;
            mask[b.0] = true;
        }
        mask
    }

    /// Vertices touched by an active edge, ascending.
    pub fn vertices(&self) -> Vec<VertexId> {
        self.vertex_mask().into_iter().enumerate().filter_map(|(i, on)| on.then_some(VertexId(i))).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_mask().into_iter().filter(|&b| b).count()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.vertices().into_iter().map(|v| self.degree(v)).min()
    }

    pub fn without(&self, removed: &EdgeSubset) -> Subgraph<'g> {
        Subgraph::new(self.host, self.edges.difference(removed))
    }

    pub fn restrict(&self, keep: &EdgeSubset) -> Subgraph<'g> {
        Subgraph::new(self.host, self.edges.intersection(keep))
    }

    pub fn without_edges<I: IntoIterator<Item = EdgeId>>(&self, removed: I) -> Subgraph<'g> {
        let mut edges = self.edges.clone();
        for e in removed {
            edges.remove(e);
        }
        Subgraph::new(self.host, edges)
    }

    /// BFS distances (in edges) from `s`; `None` marks unreachable vertices.
    pub fn distances_from(&self, s: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.host.vertex_count()];
        dist[s.0] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v.0].unwrap();
            for (_, w) in self.incident(v) {
                if dist[w.0].is_none() {
                    dist[w.0] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// A shortest `s`–`t` path as an edge sequence; ties go to smaller edge ids.
    pub fn shortest_path(&self, s: VertexId, t: VertexId) -> Option<Vec<EdgeId>> {
        let mut parent: Vec<Option<EdgeId>> = vec![None; self.host.vertex_count()];
        let mut seen = vec![false; self.host.vertex_count()];
        seen[s.0] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            if v == t {
                break;
            }
            for (e, w) in self.incident(v) {
                if !seen[w.0] {
                    seen[w.0] = true;
                    parent[w.0] = Some(e);
                    queue.push_back(w);
                }
            }
        }
        if !seen[t.0] {
            return None;
        }
        let mut edges = Vec::new();
        let mut cur = t;
        while cur != s {
            let e = parent[cur.0].unwrap();
            edges.push(e);
            cur = self.host.other(e, cur);
        }
        edges.reverse();
        Some(edges)
    }

    /// Connected components of the view as vertex lists, each ascending,
    /// ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mask = self.vertex_mask();
        let mut comp = vec![usize::MAX; self.host.vertex_count()];
        let mut out = Vec::new();
        for s in 0..mask.len() {
            if !mask[s] || comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![VertexId(s)];
            comp[s] = id;
            let mut stack = vec![VertexId(s)];
            while let Some(v) = stack.pop() {
                for (_, w) in self.incident(v) {
                    if comp[w.0] == usize::MAX {
                        comp[w.0] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort();
            out.push(members);
        }
        out
    }

    /// Edge sets of the connected components, in the order of [`components`](Self::components).
    pub fn component_edge_sets(&self) -> Vec<EdgeSubset> {
        let comps = self.components();
        let mut label = vec![usize::MAX; self.host.vertex_count()];
        for (i, c) in comps.iter().enumerate() {
            for v in c {
                label[v.0] = i;
            }
        }
        let mut sets = vec![EdgeSubset::empty(self.host.edge_count()); comps.len()];
        for e in self.edges.iter() {
            let (a, _) = self.host.endpoints(e);
            sets[label[a.0]].insert(e);
        }
        sets
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn view_keeps_host_ids() {
        let g = MultiGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let h = g.full().without_edges([EdgeId(1)]);
        assert_eq!(h.endpoints(EdgeId(2)), g.endpoints(EdgeId(2)));
        assert_eq!(h.degree(VertexId(1)), 1);
        assert_eq!(h.components().len(), 1);
        let p = h.shortest_path(VertexId(1), VertexId(2)).unwrap();
        assert_eq!(p, vec![EdgeId(0), EdgeId(3), EdgeId(2)]);
    }

    #[test]
    fn components_of_split_view() {
        let g = MultiGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.full().without_edges([EdgeId(1)]);
        assert_eq!(h.components(), vec![vec![VertexId(0), VertexId(1)], vec![VertexId(2), VertexId(3)]]);
        assert_eq!(h.component_edge_sets()[1].to_vec(), vec![EdgeId(2)]);
    }
}
