use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSubset, Path, Subgraph, VertexId};

/// Unit-capacity flow on an undirected view: `+1` runs from the first
/// endpoint of an edge to the second, `-1` the other way.
#[derive(Clone, Debug)]
pub struct Flow {
    dir: Vec<i8>,
    value: usize,
}

#[derive(Clone, Debug)]
pub enum FlowOutcome {
    /// The flow reached the requested limit.
    Saturated(Flow),
    /// Maximum flow below the limit, witnessed by a minimum cut.
    Cut(EdgeSubset),
}

impl Flow {
    pub fn value(&self) -> usize {
        self.value
    }

    /// Splits a single-source single-sink flow into `count` edge-disjoint
    /// simple paths by walking flow edges and erasing closed loops.
    pub fn decompose(&self, view: &Subgraph<'_>, s: VertexId, t: VertexId, count: usize) -> Result<Vec<Path>> {
        let g = view.host();
        let mut out_edges: Vec<Vec<EdgeId>> = vec![Vec::new(); g.vertex_count()];
        for e in view.edge_ids() {
            let (a, b) = g.endpoints(e);
            match self.dir[e.0] {
                1 => out_edges[a.0].push(e),
                -1 => out_edges[b.0].push(e),
                _ => {}
            }
        }
        let mut next = vec![0usize; g.vertex_count()];
        let mut paths = Vec::with_capacity(count);
        for _ in 0..count {
            let mut verts = vec![s];
            let mut edges: Vec<EdgeId> = Vec::new();
            let mut pos: HashMap<VertexId, usize> = HashMap::from([(s, 0)]);
            let mut cur = s;
            while cur != t {
                let Some(&e) = out_edges[cur.0].get(next[cur.0]) else {
                    return Err(Error::claim("flow decomposition", format!("flow stalls at {cur}")));
                };
                next[cur.0] += 1;
                let w = g.other(e, cur);
                if let Some(&p) = pos.get(&w) {
                    for x in verts.drain(p + 1..) {
                        pos.remove(&x);
                    }
                    edges.truncate(p);
                } else {
                    pos.insert(w, verts.len());
                    verts.push(w);
                    edges.push(e);
                }
                cur = w;
            }
            paths.push(Path::new(g, s, edges)?);
        }
        Ok(paths)
    }
}

/// Max-flow between two vertex classes, each other class being merged into
/// a single node of unbounded internal capacity. `labels[v]` is the class of
/// `v`, if any. Stops as soon as the flow reaches `limit`.
fn run(
    view: &Subgraph<'_>,
    labels: &[Option<usize>],
    members: &[Vec<VertexId>],
    src: usize,
    sink: usize,
    limit: usize,
) -> Result<FlowOutcome> {
    let g = view.host();
    let n = g.vertex_count();
    let mut flow = Flow { dir: vec![0; g.edge_count()], value: 0 };
    loop {
        if flow.value >= limit {
            return Ok(FlowOutcome::Saturated(flow));
        }
        // parent: Some((edge, from)) for edge steps, (None, from) for jumps within a class
        let mut parent: Vec<Option<(Option<EdgeId>, VertexId)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        for &v in &members[src] {
            seen[v.0] = true;
            queue.push_back(v);
        }
        let mut jumped = vec![false; members.len()];
        jumped[src] = true;
        let mut reached: Option<VertexId> = None;
        'bfs: while let Some(v) = queue.pop_front() {
            if let Some(c) = labels[v.0] {
                if !jumped[c] {
                    jumped[c] = true;
                    for &w in &members[c] {
                        if !seen[w.0] {
                            seen[w.0] = true;
                            parent[w.0] = Some((None, v));
                            queue.push_back(w);
                        }
                    }
                }
            }
            for (e, w) in view.incident(v) {
                if w == v || seen[w.0] {
                    continue;
                }
                let (a, _) = g.endpoints(e);
                let residual = if a == v { flow.dir[e.0] < 1 } else { flow.dir[e.0] > -1 };
                if !residual {
                    continue;
                }
                seen[w.0] = true;
                parent[w.0] = Some((Some(e), v));
                if labels[w.0] == Some(sink) {
                    reached = Some(w);
                    break 'bfs;
                }
                queue.push_back(w);
            }
        }
        match reached {
            Some(mut x) => {
                while let Some((step, from)) = parent[x.0] {
                    if let Some(e) = step {
                        let (a, _) = g.endpoints(e);
                        flow.dir[e.0] += if a == from { 1 } else { -1 };
                    }
                    x = from;
                }
                flow.value += 1;
            }
            None => {
                let mut cut = EdgeSubset::empty(g.edge_count());
                for e in view.edge_ids() {
                    let (a, b) = g.endpoints(e);
                    if seen[a.0] != seen[b.0] {
                        cut.insert(e);
                    }
                }
                crate::ensure_claim!(
                    cut.len() == flow.value,
                    "max-flow min-cut",
                    "cut of size {} for flow value {}",
                    cut.len(),
                    flow.value
                );
                return Ok(FlowOutcome::Cut(cut));
            }
        }
    }
}

/// Max-flow from vertex set `sources` to vertex set `sinks` (each merged into
/// a virtual terminal), capped at `limit`.
pub fn max_flow_between(view: &Subgraph<'_>, sources: &[VertexId], sinks: &[VertexId], limit: usize) -> Result<FlowOutcome> {
    max_flow_contracted(view, &[sources.to_vec(), sinks.to_vec()], 0, 1, limit)
}

pub(crate) fn max_flow_contracted(
    view: &Subgraph<'_>,
    sets: &[Vec<VertexId>],
    src: usize,
    sink: usize,
    limit: usize,
) -> Result<FlowOutcome> {
    let n = view.host().vertex_count();
    let mut labels: Vec<Option<usize>> = vec![None; n];
    for (i, set) in sets.iter().enumerate() {
        for v in set {
            if v.0 >= n {
                return Err(Error::invalid(format!("{v} out of range")));
            }
            if labels[v.0].is_some() {
                return Err(Error::invalid(format!("{v} lies in two terminal sets")));
            }
            labels[v.0] = Some(i);
        }
    }
    if sets[src].is_empty() || sets[sink].is_empty() {
        return Err(Error::invalid("empty terminal set"));
    }
    run(view, &labels, sets, src, sink, limit)
}
