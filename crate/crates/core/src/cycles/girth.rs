use std::collections::VecDeque;

use crate::graph::{Cycle, EdgeId, Subgraph};

/// A minimum-length cycle of the view (loops have length 1, parallel pairs
/// length 2), or `None` for a forest. BFS from every vertex; the first
/// simple closing candidate of minimum length wins.
pub fn shortest_cycle(view: &Subgraph<'_>) -> Option<Cycle> {
    let g = view.host();
    if let Some(e) = view.edge_ids().find(|&e| g.is_loop(e)) {
        return Some(Cycle::unchecked(vec![e]));
    }
    let n = g.vertex_count();
    let mut best: Option<Cycle> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent: Vec<Option<EdgeId>> = vec![None; n];
    let mut order = Vec::new();
    for root in view.vertices() {
        for &v in &order {
            dist[v] = usize::MAX;
            parent[v] = None;
        }
        order.clear();
        dist[root.0] = 0;
        order.push(root.0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u.0] >= best.as_ref().map_or(usize::MAX, |c| c.len()) {
                break;
            }
            for (e, w) in view.incident(u) {
                if Some(e) == parent[u.0] {
                    continue;
                }
                if dist[w.0] == usize::MAX {
                    dist[w.0] = dist[u.0] + 1;
                    parent[w.0] = Some(e);
                    order.push(w.0);
                    queue.push_back(w);
                    continue;
                }
                let cand = dist[u.0] + dist[w.0] + 1;
                if cand >= best.as_ref().map_or(usize::MAX, |c| c.len()) {
                    continue;
                }
                // u -> w, w up to the root, root down to u
                let mut edges = vec![e];
                let mut x = w;
                while let Some(pe) = parent[x.0] {
                    edges.push(pe);
                    x = g.other(pe, x);
                }
                let mut down = Vec::new();
                let mut x = u;
                while let Some(pe) = parent[x.0] {
                    down.push(pe);
                    x = g.other(pe, x);
                }
                edges.extend(down.into_iter().rev());
                if let Ok(c) = Cycle::new(g, edges) {
                    best = Some(c);
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::MultiGraph;

    #[test]
    fn k4_and_parallel() {
        let k4 = MultiGraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let c = shortest_cycle(&k4.full()).unwrap();
        assert_eq!(c.len(), 3);
        assert!(c.is_valid_in(&k4));
        let par = MultiGraph::from_edges(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(shortest_cycle(&par.full()).unwrap().len(), 2);
        let tree = MultiGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(shortest_cycle(&tree.full()).is_none());
    }

    #[test]
    fn petersen_girth_five() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let g = MultiGraph::from_edges(10, edges).unwrap();
        let c = shortest_cycle(&g.full()).unwrap();
        assert_eq!(c.len(), 5);
        assert!(c.is_valid_in(&g));
    }

    #[test]
    fn even_cycle() {
        let g = MultiGraph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let c = shortest_cycle(&g.full()).unwrap();
        assert_eq!(c.len(), 6);
        assert!(c.is_valid_in(&g));
    }
}
