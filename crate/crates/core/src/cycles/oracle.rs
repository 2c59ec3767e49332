use super::{DetectorBudget, Meter};
use crate::error::Result;
use crate::graph::{Cycle, EdgeId, EdgeSubset, Subgraph, VertexId};

struct Enumerator<'a, 'g> {
    view: &'a Subgraph<'g>,
    min_len: usize,
    max_len: usize,
    root: VertexId,
    allowed: Vec<bool>,
    on_path: Vec<bool>,
    path: Vec<EdgeId>,
    out: Vec<Cycle>,
    meter: &'a mut Meter,
}

impl Enumerator<'_, '_> {
    fn dist_back(&self, v: VertexId) -> (usize, Option<usize>) {
        let n = self.view.host().vertex_count();
        let mut seen = vec![false; n];
        let mut queue = vec![(v, 0usize)];
        seen[v.0] = true;
        let mut head = 0;
        let mut close = None;
        let first = self.path.first().copied();
        while head < queue.len() {
            let (x, d) = queue[head];
            head += 1;
            for (e, w) in self.view.incident(x) {
                if w == self.root && x != self.root && Some(e) != first && close.is_none() {
                    close = Some(d + 1);
                }
                if !seen[w.0] && self.allowed[w.0] && !self.on_path[w.0] {
                    seen[w.0] = true;
                    queue.push((w, d + 1));
                }
            }
        }
        (queue.len() - 1, close)
    }

    fn dfs(&mut self, v: VertexId) -> Result<()> {
        self.meter.tick()?;
        let len = self.path.len();
        let g = self.view.host();
        if len >= 1 {
            let first = self.path[0];
            let closers: Vec<EdgeId> =
                self.view.incident(v).filter(|&(e, w)| w == self.root && !g.is_loop(e) && e > first).map(|(e, _)| e).collect();
            if len + 1 >= self.min_len && len < self.max_len {
                for e in closers {
                    let mut edges = self.path.clone();
                    edges.push(e);
                    self.out.push(Cycle::unchecked(edges));
                }
            }
        }
        if len + 1 >= self.max_len {
            return Ok(());
        }
        let (reachable, close) = self.dist_back(v);
        let Some(close) = close else { return Ok(()) };
        if len + reachable + 1 < self.min_len || len + close > self.max_len {
            return Ok(());
        }
        let next: Vec<(EdgeId, VertexId)> = self.view.incident(v).collect();
        for (e, w) in next {
            if w == v || w == self.root || !self.allowed[w.0] || self.on_path[w.0] {
                continue;
            }
            self.path.push(e);
            self.on_path[w.0] = true;
            self.dfs(w)?;
            self.on_path[w.0] = false;
            self.path.pop();
        }
        Ok(())
    }
}

/// Every cycle of the view with length in `[min_len, max_len]`, each listed
/// once. A cycle is reported from its smallest vertex, in the direction whose
/// first edge id is smaller than its last.
pub fn enumerate_cycles(view: &Subgraph<'_>, min_len: usize, max_len: Option<usize>, budget: &DetectorBudget) -> Result<Vec<Cycle>> {
    let g = view.host();
    let n = g.vertex_count();
    let max_len = max_len.unwrap_or(usize::MAX);
    let mut meter = budget.meter("cycle enumeration");
    let mut out: Vec<Cycle> = Vec::new();
    if min_len <= 1 && max_len >= 1 {
        out.extend(view.edge_ids().filter(|&e| g.is_loop(e)).map(|e| Cycle::unchecked(vec![e])));
    }
    let verts = view.vertices();
    let mut en = Enumerator {
        view,
        min_len,
        max_len,
        root: VertexId(0),
        allowed: vec![false; n],
        on_path: vec![false; n],
        path: Vec::new(),
        out: Vec::new(),
        meter: &mut meter,
    };
    for &root in &verts {
        en.allowed.iter_mut().for_each(|a| *a = false);
        for &v in verts.iter().filter(|&&v| v > root) {
            en.allowed[v.0] = true;
        }
        en.root = root;
        en.on_path[root.0] = true;
        en.dfs(root)?;
        en.on_path[root.0] = false;
    }
    out.append(&mut en.out);
    Ok(out)
}

struct Packer<'a> {
    sets: Vec<EdgeSubset>,
    lens: Vec<usize>,
    best: Vec<usize>,
    chosen: Vec<usize>,
    meter: &'a mut Meter,
}

impl Packer<'_> {
    fn rec(&mut self, avail: &EdgeSubset, candidates: &[usize]) -> Result<()> {
        self.meter.tick()?;
        if candidates.is_empty() {
            if self.chosen.len() > self.best.len() {
                self.best = self.chosen.clone();
            }
            return Ok(());
        }
        let mut union = EdgeSubset::empty(avail.universe());
        let mut shortest = usize::MAX;
        for &c in candidates {
            union.union_with(&self.sets[c]);
            shortest = shortest.min(self.lens[c]);
        }
        let bound = self.chosen.len() + union.len() / shortest.max(1);
        if bound <= self.best.len() {
            return Ok(());
        }
        let e = union.first().unwrap();
        let takers: Vec<usize> = candidates.iter().copied().filter(|&c| self.sets[c].contains(e)).collect();
        for c in takers {
            let next_avail = avail.difference(&self.sets[c]);
            let next: Vec<usize> = candidates.iter().copied().filter(|&d| self.sets[d].is_subset(&next_avail)).collect();
            self.chosen.push(c);
            self.rec(&next_avail, &next)?;
            self.chosen.pop();
        }
        let mut next_avail = avail.clone();
        next_avail.remove(e);
        let next: Vec<usize> = candidates.iter().copied().filter(|&d| !self.sets[d].contains(e)).collect();
        self.rec(&next_avail, &next)
    }
}

/// Maximum number of pairwise edge-disjoint cycles of length at least `ell`,
/// with a witness, by branch and bound over the enumerated cycles.
pub fn oracle_max_packing(view: &Subgraph<'_>, ell: usize, budget: &DetectorBudget) -> Result<(usize, Vec<Cycle>)> {
    let m = view.host().edge_count();
    let mut cycles = enumerate_cycles(view, ell, None, budget)?;
    cycles.sort_by_key(|c| (c.len(), c.sorted_ids()));
    let mut meter = budget.meter("packing oracle");
    let mut packer = Packer {
        sets: cycles.iter().map(|c| c.edge_set(m)).collect(),
        lens: cycles.iter().map(|c| c.len()).collect(),
        best: Vec::new(),
        chosen: Vec::new(),
        meter: &mut meter,
    };
    let all: Vec<usize> = (0..cycles.len()).collect();
    packer.rec(view.edges(), &all)?;
    let witness: Vec<Cycle> = packer.best.iter().map(|&i| cycles[i].clone()).collect();
    Ok((witness.len(), witness))
}

struct Hitter<'a> {
    sets: Vec<EdgeSubset>,
    chosen: EdgeSubset,
    meter: &'a mut Meter,
}

impl Hitter<'_> {
    /// Greedy count of pairwise disjoint cycles missed by the chosen edges.
    fn lower_bound(&self) -> usize {
        let mut used = EdgeSubset::empty(self.chosen.universe());
        let mut count = 0;
        for s in &self.sets {
            if s.is_disjoint(&self.chosen) && s.is_disjoint(&used) {
                used.union_with(s);
                count += 1;
            }
        }
        count
    }

    fn rec(&mut self, budget: usize) -> Result<bool> {
        self.meter.tick()?;
        let Some(open) = self.sets.iter().position(|s| s.is_disjoint(&self.chosen)) else {
            return Ok(true);
        };
        if budget == 0 || self.lower_bound() > budget {
            return Ok(false);
        }
        let edges = self.sets[open].to_vec();
        for e in edges {
            self.chosen.insert(e);
            if self.rec(budget - 1)? {
                return Ok(true);
            }
            self.chosen.remove(e);
        }
        Ok(false)
    }
}

/// Minimum number of edges meeting every cycle of length at least `ell`,
/// with a witness, by searching hitting sets of increasing size.
pub fn oracle_min_hitting(view: &Subgraph<'_>, ell: usize, budget: &DetectorBudget) -> Result<(usize, EdgeSubset)> {
    let m = view.host().edge_count();
    let mut cycles = enumerate_cycles(view, ell, None, budget)?;
    cycles.sort_by_key(|c| (c.len(), c.sorted_ids()));
    let mut meter = budget.meter("hitting set oracle");
    let mut hitter = Hitter { sets: cycles.iter().map(|c| c.edge_set(m)).collect(), chosen: EdgeSubset::empty(m), meter: &mut meter };
    for size in 0..=m {
        if hitter.rec(size)? {
            let x = hitter.chosen.clone();
            return Ok((x.len(), x));
        }
    }
    unreachable!("deleting every edge hits every cycle")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::MultiGraph;

    fn b() -> DetectorBudget {
        DetectorBudget::default()
    }

    /// Two vertices joined by three internally disjoint paths of length `len`.
    fn theta(len: usize) -> MultiGraph {
        let mut g = MultiGraph::new(2);
        for _ in 0..3 {
            let mut prev = VertexId(0);
            for _ in 0..len - 1 {
                let v = g.add_vertex();
                g.add_edge(prev, v);
                prev = v;
            }
            g.add_edge(prev, VertexId(1));
        }
        g
    }

    #[test]
    fn enumerate_k4() {
        let g = MultiGraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let all = enumerate_cycles(&g.full(), 1, None, &b()).unwrap();
        assert_eq!(all.len(), 7);
        assert!(all.iter().all(|c| c.is_valid_in(&g)));
        assert_eq!(enumerate_cycles(&g.full(), 4, None, &b()).unwrap().len(), 3);
        assert_eq!(enumerate_cycles(&g.full(), 1, Some(3), &b()).unwrap().len(), 4);
    }

    #[test]
    fn enumerate_multigraph() {
        let g = MultiGraph::from_edges(2, [(0, 1), (0, 1), (0, 1), (1, 1)]).unwrap();
        let all = enumerate_cycles(&g.full(), 1, None, &b()).unwrap();
        assert_eq!(all.len(), 4);
    }

    #[test]
    fn two_disjoint_cycles() {
        let c5 = MultiGraph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let g = c5.disjoint_union(&c5);
        assert_eq!(oracle_max_packing(&g.full(), 5, &b()).unwrap().0, 2);
        assert_eq!(oracle_min_hitting(&c5.full(), 5, &b()).unwrap().0, 1);
    }

    #[test]
    fn theta_examples() {
        let g = theta(4);
        let (p, w) = oracle_max_packing(&g.full(), 5, &b()).unwrap();
        assert_eq!(p, 1);
        assert_eq!(w.len(), 1);
        let (h, x) = oracle_min_hitting(&g.full(), 5, &b()).unwrap();
        assert_eq!(h, 2);
        assert_eq!(x.len(), 2);
    }

    #[test]
    fn forest_needs_nothing() {
        let g = MultiGraph::from_edges(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(oracle_min_hitting(&g.full(), 3, &b()).unwrap().0, 0);
        assert_eq!(oracle_max_packing(&g.full(), 3, &b()).unwrap().0, 0);
    }
}
