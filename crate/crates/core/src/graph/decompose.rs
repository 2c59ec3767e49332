use super::{EdgeId, EdgeSubset, MultiGraph, Subgraph, VertexId};

/// Connected components of `g` (isolated vertices included), each ascending,
/// ordered by smallest member.
pub fn components(g: &MultiGraph) -> Vec<Vec<VertexId>> {
    let mut label = vec![false; g.vertex_count()];
    let mut out = Vec::new();
    for s in g.vertices() {
        if label[s.0] {
            continue;
        }
        label[s.0] = true;
        let mut members = vec![s];
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &e in g.incident(v) {
                let w = g.other(e, v);
                if !label[w.0] {
                    label[w.0] = true;
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

struct Frame {
    v: VertexId,
    parent_edge: Option<EdgeId>,
    next: usize,
}

/// Biconnected components of a view as edge sets, ordered by smallest edge id.
/// A loop forms its own block; parallel edges share a block.
pub fn blocks(view: &Subgraph<'_>) -> Vec<EdgeSubset> {
    let g = view.host();
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut disc = vec![0usize; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut out = Vec::new();
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    for root in view.vertices() {
        if disc[root.0] != 0 {
            continue;
        }
        time += 1;
        disc[root.0] = time;
        low[root.0] = time;
        let mut frames = vec![Frame { v: root, parent_edge: None, next: 0 }];
        while let Some(top) = frames.last_mut() {
            let v = top.v;
            let inc = g.incident(v);
            if top.next < inc.len() {
                let e = inc[top.next];
                top.next += 1;
                if !view.has_edge(e) || Some(e) == top.parent_edge {
                    continue;
                }
                let w = g.other(e, v);
                if w == v {
                    out.push(EdgeSubset::from_ids(m, [e]));
                } else if disc[w.0] == 0 {
                    edge_stack.push(e);
                    time += 1;
                    disc[w.0] = time;
                    low[w.0] = time;
                    frames.push(Frame { v: w, parent_edge: Some(e), next: 0 });
                } else if disc[w.0] < disc[v.0] {
                    edge_stack.push(e);
                    low[v.0] = low[v.0].min(disc[w.0]);
                }
                continue;
            }
            let done = frames.pop().unwrap();
            if let Some(parent) = frames.last() {
                let u = parent.v;
                low[u.0] = low[u.0].min(low[v.0]);
                if low[v.0] >= disc[u.0] {
                    let tree_edge = done.parent_edge.unwrap();
                    let mut block = EdgeSubset::empty(m);
                    while let Some(f) = edge_stack.pop() {
                        block.insert(f);
                        if f == tree_edge {
                            break;
                        }
                    }
                    out.push(block);
                }
            }
        }
    }
    out.sort_by_key(|b| b.first());
    out
}
