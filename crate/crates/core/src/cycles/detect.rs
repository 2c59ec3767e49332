use super::{DetectorBudget, Meter};
use crate::error::{Error, Result};
use crate::graph::{blocks, Cycle, EdgeId, EdgeSubset, Subgraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QueryMode {
    AnyLong,
    ShortestLong,
    ThroughEdge(EdgeId),
    LengthAtMost(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LongCycleQuery {
    pub ell: usize,
    pub mode: QueryMode,
}

impl LongCycleQuery {
    pub fn any_long(ell: usize) -> Self {
        LongCycleQuery { ell, mode: QueryMode::AnyLong }
    }

    pub fn shortest_long(ell: usize) -> Self {
        LongCycleQuery { ell, mode: QueryMode::ShortestLong }
    }

    pub fn through_edge(ell: usize, e: EdgeId) -> Self {
        LongCycleQuery { ell, mode: QueryMode::ThroughEdge(e) }
    }

    pub fn length_at_most(ell: usize, bound: usize) -> Self {
        LongCycleQuery { ell, mode: QueryMode::LengthAtMost(bound) }
    }

    pub fn validate(&self) -> Result<()> {
        if self.ell == 0 {
            return Err(Error::invalid("ell must be at least 1"));
        }
        if let QueryMode::LengthAtMost(b) = self.mode {
            if b < self.ell {
                return Err(Error::invalid(format!("length bound {b} below ell={}", self.ell)));
            }
        }
        Ok(())
    }
}

/// Depth-first search over simple paths starting at `root`, looking for a
/// closing edge back to `root`.
struct Search<'a, 'g> {
    view: &'a Subgraph<'g>,
    ell: usize,
    upper: usize,
    minimize: bool,
    allowed: Vec<bool>,
    on_path: Vec<bool>,
    path: Vec<EdgeId>,
    root: VertexId,
    best: Option<Vec<EdgeId>>,
    meter: &'a mut Meter,
    seen: Vec<u32>,
    stamp: u32,
    queue: Vec<(VertexId, usize)>,
}

impl<'a, 'g> Search<'a, 'g> {
    fn new(view: &'a Subgraph<'g>, ell: usize, upper: usize, minimize: bool, meter: &'a mut Meter) -> Self {
        let n = view.host().vertex_count();
        Search {
            view,
            ell,
            upper,
            minimize,
            allowed: vec![false; n],
            on_path: vec![false; n],
            path: Vec::new(),
            root: VertexId(0),
            best: None,
            meter,
            seen: vec![0; n],
            stamp: 0,
            queue: Vec::new(),
        }
    }

    fn best_len(&self) -> usize {
        self.best.as_ref().map_or(usize::MAX, |b| b.len())
    }

    fn closing_edge(&self, v: VertexId) -> Option<EdgeId> {
        let first = self.path.first().copied();
        self.view.incident(v).find(|&(e, w)| w == self.root && Some(e) != first && !self.view.host().is_loop(e)).map(|(e, _)| e)
    }

    /// Counts unvisited vertices reachable from `v` and the least number of
    /// further edges needed to get back to the root.
    fn reach(&mut self, v: VertexId) -> (usize, Option<usize>) {
        self.stamp += 1;
        let stamp = self.stamp;
        self.queue.clear();
        self.queue.push((v, 0));
        self.seen[v.0] = stamp;
        let mut head = 0;
        let mut close: Option<usize> = None;
        while head < self.queue.len() {
            let (x, d) = self.queue[head];
            head += 1;
            if close.is_none() && self.closing_edge(x).is_some() {
                close = Some(d + 1);
            }
            for (_, w) in self.view.incident(x) {
                if self.seen[w.0] != stamp && self.allowed[w.0] && !self.on_path[w.0] && w != self.root {
                    self.seen[w.0] = stamp;
                    self.queue.push((w, d + 1));
                }
            }
        }
        (self.queue.len() - 1, close)
    }

    fn dfs(&mut self, v: VertexId) -> Result<bool> {
        self.meter.tick()?;
        let len = self.path.len();
        if len >= 1 {
            if let Some(e) = self.closing_edge(v) {
                let cand = len + 1;
                if cand >= self.ell && cand <= self.upper && cand < self.best_len() {
                    let mut edges = self.path.clone();
                    edges.push(e);
                    self.best = Some(edges);
                    if !self.minimize {
                        return Ok(true);
                    }
                    return Ok(false);
                }
            }
        }
        let (reachable, close) = self.reach(v);
        let Some(close) = close else { return Ok(false) };
        if len + reachable + 1 < self.ell {
            return Ok(false);
        }
        let shortest_possible = (len + close).max(self.ell);
        if shortest_possible > self.upper || (self.minimize && shortest_possible >= self.best_len()) {
            return Ok(false);
        }
        let mut tried: Vec<VertexId> = Vec::new();
        let next: Vec<(EdgeId, VertexId)> = self.view.incident(v).collect();
        for (e, w) in next {
            if w == v || w == self.root || !self.allowed[w.0] || self.on_path[w.0] || tried.contains(&w) {
                continue;
            }
            tried.push(w);
            self.path.push(e);
            self.on_path[w.0] = true;
            let stop = self.dfs(w)?;
            self.on_path[w.0] = false;
            self.path.pop();
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn block_vertices(view: &Subgraph<'_>, block: &EdgeSubset) -> Vec<VertexId> {
    view.restrict(block).vertices()
}

/// Exact long-cycle search restricted by `q`, run block by block. Exhausting
/// the budget is an error, never a negative answer.
pub fn find_long_cycle(view: &Subgraph<'_>, q: &LongCycleQuery, b: &DetectorBudget) -> Result<Option<Cycle>> {
    q.validate()?;
    let g = view.host();
    let upper = match q.mode {
        QueryMode::LengthAtMost(x) => x,
        _ => usize::MAX,
    };
    if let QueryMode::ThroughEdge(e) = q.mode {
        if e.0 >= g.edge_count() || !view.has_edge(e) {
            return Err(Error::invalid(format!("{e} is not an edge of the graph")));
        }
        if g.is_loop(e) {
            return Ok((q.ell <= 1).then(|| Cycle::unchecked(vec![e])));
        }
    } else if q.ell <= 1 {
        if let Some(e) = view.edge_ids().find(|&e| g.is_loop(e)) {
            return Ok(Some(Cycle::unchecked(vec![e])));
        }
    }
    let mut meter = b.meter("long cycle search");
    let minimize = q.mode == QueryMode::ShortestLong;
    let mut search = Search::new(view, q.ell, upper, minimize, &mut meter);
    let all_blocks = blocks(view);
    match q.mode {
        QueryMode::ThroughEdge(e) => {
            let block = all_blocks.iter().find(|blk| blk.contains(e)).expect("every edge lies in a block");
            let verts = block_vertices(view, block);
            if verts.len() < q.ell {
                return Ok(None);
            }
            for &v in &verts {
                search.allowed[v.0] = true;
            }
            let (a, bb) = g.endpoints(e);
            search.root = a;
            search.path.push(e);
            search.on_path[a.0] = true;
            search.on_path[bb.0] = true;
            search.dfs(bb)?;
        }
        _ => {
            for block in &all_blocks {
                if block.len() < 2 {
                    continue;
                }
                let verts = block_vertices(view, block);
                if verts.len() < q.ell.max(2) {
                    continue;
                }
                for &root in &verts {
                    search.allowed.iter_mut().for_each(|x| *x = false);
                    for &v in verts.iter().filter(|&&v| v > root) {
                        search.allowed[v.0] = true;
                    }
                    search.root = root;
                    search.on_path[root.0] = true;
                    let stop = search.dfs(root)?;
                    search.on_path[root.0] = false;
                    if stop {
                        break;
                    }
                }
                if search.best.is_some() && !minimize {
                    break;
                }
            }
        }
    }
    Ok(search.best.map(Cycle::unchecked))
}

pub fn has_long_cycle(view: &Subgraph<'_>, ell: usize, b: &DetectorBudget) -> Result<bool> {
    Ok(find_long_cycle(view, &LongCycleQuery::any_long(ell), b)?.is_some())
}

pub fn edge_on_long_cycle(view: &Subgraph<'_>, e: EdgeId, ell: usize, b: &DetectorBudget) -> Result<bool> {
    Ok(find_long_cycle(view, &LongCycleQuery::through_edge(ell, e), b)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::MultiGraph;

    fn cycle_graph(n: usize) -> MultiGraph {
        MultiGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn petersen() -> MultiGraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        MultiGraph::from_edges(10, edges).unwrap()
    }

    fn b() -> DetectorBudget {
        DetectorBudget::default()
    }

    #[test]
    fn c6_long_c4_not() {
        let g = cycle_graph(6);
        let c = find_long_cycle(&g.full(), &LongCycleQuery::any_long(5), &b()).unwrap().unwrap();
        assert_eq!(c.len(), 6);
        assert!(c.is_valid_in(&g));
        let g = cycle_graph(4);
        assert!(find_long_cycle(&g.full(), &LongCycleQuery::any_long(5), &b()).unwrap().is_none());
    }

    #[test]
    fn petersen_shortest_long() {
        let g = petersen();
        let c = find_long_cycle(&g.full(), &LongCycleQuery::shortest_long(5), &b()).unwrap().unwrap();
        assert_eq!(c.len(), 5);
        let c = find_long_cycle(&g.full(), &LongCycleQuery::shortest_long(7), &b()).unwrap().unwrap();
        assert_eq!(c.len(), 8);
        assert!(c.is_valid_in(&g));
        assert!(find_long_cycle(&g.full(), &LongCycleQuery::any_long(10), &b()).unwrap().is_none());
        let c = find_long_cycle(&g.full(), &LongCycleQuery::length_at_most(6, 6), &b()).unwrap().unwrap();
        assert_eq!(c.len(), 6);
    }

    #[test]
    fn pendant_and_chord_edges() {
        let mut g = cycle_graph(6);
        let chord = g.add_edge(VertexId(0), VertexId(3));
        let v = g.add_vertex();
        let pendant = g.add_edge(VertexId(1), v);
        assert!(!edge_on_long_cycle(&g.full(), pendant, 3, &b()).unwrap());
        assert!(!edge_on_long_cycle(&g.full(), chord, 6, &b()).unwrap());
        assert!(edge_on_long_cycle(&g.full(), chord, 4, &b()).unwrap());
        assert!(edge_on_long_cycle(&g.full(), EdgeId(2), 6, &b()).unwrap());
    }

    #[test]
    fn multigraph_short_cycles() {
        let g = MultiGraph::from_edges(2, [(0, 1), (0, 1), (1, 1)]).unwrap();
        let c = find_long_cycle(&g.full(), &LongCycleQuery::shortest_long(1), &b()).unwrap().unwrap();
        assert_eq!(c.len(), 1);
        let c = find_long_cycle(&g.full(), &LongCycleQuery::any_long(2), &b()).unwrap().unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.is_valid_in(&g));
        assert!(edge_on_long_cycle(&g.full(), EdgeId(1), 2, &b()).unwrap());
        assert!(!edge_on_long_cycle(&g.full(), EdgeId(2), 2, &b()).unwrap());
    }

    #[test]
    fn budget_is_an_error() {
        let g = petersen();
        let r = find_long_cycle(&g.full(), &LongCycleQuery::any_long(10), &DetectorBudget::new(5, 0));
        assert!(matches!(r, Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn query_validation() {
        assert!(LongCycleQuery::any_long(0).validate().is_err());
        assert!(LongCycleQuery::length_at_most(5, 4).validate().is_err());
    }
}
