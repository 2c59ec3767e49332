use std::collections::BTreeSet;

use super::{Cycle, EdgeId, MultiGraph, Path, Subgraph, VertexId};

/// Links a reduced multigraph back to the graph it was suppressed from:
/// reduced edge `i` stands for `paths[i]`, and reduced vertex `j` is
/// original vertex `origin[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuppressionMap {
    paths: Vec<Path>,
    origin: Vec<VertexId>,
    reduced_ends: Vec<(VertexId, VertexId)>,
}

impl SuppressionMap {
    pub fn path(&self, e: EdgeId) -> &Path {
        &self.paths[e.0]
    }

    pub fn origin(&self, v: VertexId) -> VertexId {
        self.origin[v.0]
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    /// Replaces every reduced edge of `c` by its path.
    pub fn expand(&self, c: &Cycle) -> Cycle {
        let ends = |e: EdgeId| self.reduced_ends[e.0];
        let seq = c.vertices_with(ends, self.origin.len());
        let mut edges = Vec::new();
        for (i, &e) in c.edges().iter().enumerate() {
            let from = self.origin[seq[i].0];
            let p = &self.paths[e.0];
            if p.start() == from {
                edges.extend_from_slice(p.edges());
            } else {
                edges.extend(p.edges().iter().rev());
            }
        }
        Cycle::unchecked(edges)
    }
}

pub fn expand_cycle(c: &Cycle, map: &SuppressionMap) -> Cycle {
    map.expand(c)
}

struct WorkEdge {
    a: VertexId,
    b: VertexId,
    path: Vec<EdgeId>,
}

/// Repeatedly deletes vertices of degree at most 1 and suppresses vertices of
/// degree 2 (a vertex whose only edge is a loop is deleted with the loop).
/// Reduced vertices keep the relative order of their originals; reduced
/// edges are ordered by the smallest original edge they contain.
pub fn suppress_degree2(view: &Subgraph<'_>) -> (MultiGraph, SuppressionMap) {
    let g = view.host();
    let n = g.vertex_count();
    let mut work: Vec<Option<WorkEdge>> = Vec::new();
    let mut inc: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    let mut deg = vec![0usize; n];
    let mut alive = view.vertex_mask();
    for e in view.edge_ids() {
        let (a, b) = g.endpoints(e);
        let id = work.len();
        work.push(Some(WorkEdge { a, b, path: vec![e] }));
        inc[a.0].insert(id);
        inc[b.0].insert(id);
        deg[a.0] += 1;
        deg[b.0] += 1;
    }
    let mut queue: BTreeSet<usize> = (0..n).filter(|&v| alive[v] && deg[v] <= 2).collect();
    while let Some(v) = queue.pop_first() {
        if !alive[v] || deg[v] > 2 {
            continue;
        }
        let ids: Vec<usize> = inc[v].iter().copied().collect();
        let mut drop_edge = |id: usize, work: &mut Vec<Option<WorkEdge>>, deg: &mut Vec<usize>, queue: &mut BTreeSet<usize>| {
            let we = work[id].take().unwrap();
            for x in [we.a, we.b] {
                inc[x.0].remove(&id);
                deg[x.0] -= 1;
                if x.0 != v {
                    queue.insert(x.0);
                }
            }
        };
        match (deg[v], ids.len()) {
            (0, _) => {}
            (1, 1) => drop_edge(ids[0], &mut work, &mut deg, &mut queue),
            (2, 1) => drop_edge(ids[0], &mut work, &mut deg, &mut queue),
            (2, 2) => {
                let e1 = work[ids[0]].take().unwrap();
                let e2 = work[ids[1]].take().unwrap();
                let vv = VertexId(v);
                // orient e1 as x -> v and e2 as v -> y
                let (x, mut path) = if e1.b == vv { (e1.a, e1.path) } else { (e1.b, e1.path.into_iter().rev().collect()) };
                let (y, tail) = if e2.a == vv { (e2.b, e2.path) } else { (e2.a, e2.path.into_iter().rev().collect::<Vec<_>>()) };
                path.extend(tail);
                for x0 in [x, y] {
                    inc[x0.0].remove(&ids[0]);
                    inc[x0.0].remove(&ids[1]);
                }
                let id = work.len();
                work.push(Some(WorkEdge { a: x, b: y, path }));
                inc[x.0].insert(id);
                inc[y.0].insert(id);
                queue.insert(x.0);
                queue.insert(y.0);
            }
            _ => unreachable!("degree bookkeeping"),
        }
        inc[v].clear();
        deg[v] = 0;
        alive[v] = false;
    }
    let mut new_id = vec![usize::MAX; n];
    let mut origin = Vec::new();
    for v in 0..n {
        if alive[v] {
            new_id[v] = origin.len();
            origin.push(VertexId(v));
        }
    }
    let mut kept: Vec<WorkEdge> = work.into_iter().flatten().collect();
    kept.sort_by_key(|we| *we.path.iter().min().unwrap());
    let mut reduced = MultiGraph::new(origin.len());
    let mut paths = Vec::with_capacity(kept.len());
    let mut reduced_ends = Vec::with_capacity(kept.len());
    for we in kept {
        let ra = VertexId(new_id[we.a.0]);
        let rb = VertexId(new_id[we.b.0]);
        reduced.add_edge(ra, rb);
        reduced_ends.push((ra, rb));
        paths.push(Path::new(g, we.a, we.path).expect("suppressed chain is a path"));
    }
    (reduced, SuppressionMap { paths, origin, reduced_ends })
}
