//! Frames: subgraphs of minimum degree 2 all of whose cycles are long. A
//! frame is grown by F-paths until none can be added, and the rest of the
//! graph is split into bridges hanging off it.

use crate::cycles::{find_long_cycle, shortest_cycle, DetectorBudget, LongCycleQuery, Meter};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSubset, MultiGraph, Path, Subgraph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    edges: EdgeSubset,
    branch: Vec<VertexId>,
    ds: usize,
    ell: usize,
    in_frame: Vec<bool>,
}

impl Frame {
    pub fn new(g: &MultiGraph, edges: EdgeSubset, ell: usize) -> Frame {
        let view = g.view(edges);
        let in_frame = view.vertex_mask();
        let mut branch = Vec::new();
        let mut ds = 0;
        for v in view.vertices() {
            let d = view.degree(v);
            if d >= 3 {
                branch.push(v);
                ds += d;
            }
        }
        Frame { edges: view.into_edges(), branch, ds, ell, in_frame }
    }

    pub fn edges(&self) -> &EdgeSubset {
        &self.edges
    }

    /// Vertices of frame degree at least 3, ascending.
    pub fn branch_vertices(&self) -> &[VertexId] {
        &self.branch
    }

    pub fn is_branch(&self, v: VertexId) -> bool {
        self.branch.binary_search(&v).is_ok()
    }

    /// Sum of the frame degrees of the branch vertices.
    pub fn ds(&self) -> usize {
        self.ds
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.in_frame[v.0]
    }

    pub fn view<'g>(&self, g: &'g MultiGraph) -> Subgraph<'g> {
        g.view(self.edges.clone())
    }

    /// A connected frame without branch vertices.
    pub fn is_cycle(&self, g: &MultiGraph) -> bool {
        self.branch.is_empty() && self.view(g).is_connected()
    }

    /// Minimum degree 2 and no short cycle.
    pub fn validate(&self, g: &MultiGraph) -> Result<()> {
        let view = self.view(g);
        if let Some(d) = view.min_degree() {
            crate::ensure_claim!(d >= 2, "frame validity", "frame has a vertex of degree {d}");
        }
        if let Some(c) = shortest_cycle(&view) {
            crate::ensure_claim!(c.len() >= self.ell, "frame validity", "frame contains a cycle of length {}", c.len());
        }
        Ok(())
    }
}

/// The frame formed by one long cycle of `host`.
pub fn initial_frame(host: &Subgraph<'_>, ell: usize, budget: &DetectorBudget) -> Result<Frame> {
    let c = find_long_cycle(host, &LongCycleQuery::any_long(ell), budget)?
        .ok_or_else(|| Error::claim("initial frame", "the graph has no long cycle"))?;
    Ok(Frame::new(host.host(), c.edge_set(host.host().edge_count()), ell))
}

struct FPathSearch<'a, 'g> {
    host: &'a Subgraph<'g>,
    frame: &'a Frame,
    comp: Vec<usize>,
    dist: Vec<Option<usize>>,
    root: VertexId,
    on_path: Vec<bool>,
    path: Vec<EdgeId>,
    meter: Meter,
}

impl FPathSearch<'_, '_> {
    fn addable(&self, w: VertexId, len: usize) -> bool {
        if self.comp[w.0] != self.comp[self.root.0] {
            return true;
        }
        match self.dist[w.0] {
            Some(d) => len + d >= self.frame.ell,
            None => true,
        }
    }

    /// Paths of exactly `target` edges from the root, interior outside the frame.
    fn exact(&mut self, v: VertexId, target: usize) -> Result<Option<Vec<EdgeId>>> {
        self.meter.tick()?;
        let len = self.path.len();
        let next: Vec<(EdgeId, VertexId)> = self.host.incident(v).filter(|&(e, _)| !self.frame.edges.contains(e)).collect();
        for (e, w) in next {
            if w == v || self.on_path[w.0] {
                continue;
            }
            if self.frame.contains_vertex(w) {
                if len + 1 == target && self.addable(w, target) {
                    let mut p = self.path.clone();
                    p.push(e);
                    return Ok(Some(p));
                }
            } else if len + 1 < target {
                self.path.push(e);
                self.on_path[w.0] = true;
                let found = self.exact(w, target)?;
                self.on_path[w.0] = false;
                self.path.pop();
                if found.is_some() {
                    return Ok(found);
                }
            }
        }
        Ok(None)
    }

    /// Paths of at least `min` edges: walk `min - 1` edges outside the frame,
    /// then finish along any route avoiding the walk.
    fn at_least(&mut self, v: VertexId, min: usize) -> Result<Option<Vec<EdgeId>>> {
        self.meter.tick()?;
        if self.path.len() + 1 >= min {
            return Ok(self.finish(v));
        }
        let next: Vec<(EdgeId, VertexId)> = self.host.incident(v).filter(|&(e, _)| !self.frame.edges.contains(e)).collect();
        for (e, w) in next {
            if w == v || self.on_path[w.0] || self.frame.contains_vertex(w) {
                continue;
            }
            self.path.push(e);
            self.on_path[w.0] = true;
            let found = self.at_least(w, min)?;
            self.on_path[w.0] = false;
            self.path.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    fn finish(&self, v: VertexId) -> Option<Vec<EdgeId>> {
        let g = self.host.host();
        let mut parent: Vec<Option<EdgeId>> = vec![None; g.vertex_count()];
        let mut seen = self.on_path.clone();
        seen[v.0] = true;
        let mut queue = std::collections::VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            for (e, w) in self.host.incident(x) {
                if self.frame.edges.contains(e) || seen[w.0] {
                    continue;
                }
                seen[w.0] = true;
                parent[w.0] = Some(e);
                if self.frame.contains_vertex(w) {
                    let mut tail = Vec::new();
                    let mut y = w;
                    while y != v {
                        let pe = parent[y.0].unwrap();
                        tail.push(pe);
                        y = g.other(pe, y);
                    }
                    tail.reverse();
                    let mut p = self.path.clone();
                    p.extend(tail);
                    return Some(p);
                }
                queue.push_back(w);
            }
        }
        None
    }
}

fn frame_components(g: &MultiGraph, frame: &Frame) -> Vec<usize> {
    let mut comp = vec![usize::MAX; g.vertex_count()];
    for (i, c) in frame.view(g).components().iter().enumerate() {
        for v in c {
            comp[v.0] = i;
        }
    }
    comp
}

/// An F-path of `host` whose addition keeps every frame cycle long: either
/// it joins two frame components or its length plus the frame distance of
/// its ends is at least `ell`. Shorter paths are preferred.
pub fn find_addable_fpath(host: &Subgraph<'_>, frame: &Frame, budget: &DetectorBudget) -> Result<Option<Path>> {
    let g = host.host();
    let fview = frame.view(g);
    let roots: Vec<VertexId> = fview.vertices();
    let mut search = FPathSearch {
        host,
        frame,
        comp: frame_components(g, frame),
        dist: Vec::new(),
        root: VertexId(0),
        on_path: vec![false; g.vertex_count()],
        path: Vec::new(),
        meter: budget.meter("frame path search"),
    };
    let mut dists: Vec<Vec<Option<usize>>> = Vec::with_capacity(roots.len());
    for &r in &roots {
        dists.push(fview.distances_from(r));
    }
    let ell = frame.ell.max(1);
    for target in (1..ell).chain(std::iter::once(ell)) {
        for (i, &r) in roots.iter().enumerate() {
            search.root = r;
            search.dist = std::mem::take(&mut dists[i]);
            search.on_path[r.0] = true;
            let found = if target < ell { search.exact(r, target)? } else { search.at_least(r, ell)? };
            search.on_path[r.0] = false;
            dists[i] = std::mem::take(&mut search.dist);
            if let Some(edges) = found {
                return Ok(Some(Path::new(g, r, edges)?));
            }
        }
    }
    Ok(None)
}

/// Every F-path of `host`, each listed once from its smaller end. For
/// desk-scale checks of the fixpoint and shadow properties.
pub fn enumerate_fpaths(host: &Subgraph<'_>, frame: &Frame, budget: &DetectorBudget) -> Result<Vec<Path>> {
    #[allow(clippy::too_many_arguments)]
    fn rec(
        host: &Subgraph<'_>,
        frame: &Frame,
        root: VertexId,
        at: VertexId,
        on_path: &mut Vec<bool>,
        path: &mut Vec<EdgeId>,
        out: &mut Vec<Path>,
        meter: &mut Meter,
    ) -> Result<()> {
        meter.tick()?;
        let next: Vec<(EdgeId, VertexId)> = host.incident(at).filter(|&(e, _)| !frame.edges.contains(e)).collect();
        for (e, w) in next {
            if w == at || on_path[w.0] {
                continue;
            }
            path.push(e);
            if frame.contains_vertex(w) {
                if w > root {
                    out.push(Path::new(host.host(), root, path.clone())?);
                }
            } else {
                on_path[w.0] = true;
                rec(host, frame, root, w, on_path, path, out, meter)?;
                on_path[w.0] = false;
            }
            path.pop();
        }
        Ok(())
    }
    let g = host.host();
    let mut meter = budget.meter("frame path enumeration");
    let mut out = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    for root in frame.view(g).vertices() {
        on_path[root.0] = true;
        rec(host, frame, root, root, &mut on_path, &mut Vec::new(), &mut out, &mut meter)?;
        on_path[root.0] = false;
    }
    Ok(out)
}

/// Whether adding `q` to the frame keeps every cycle long.
pub fn is_addable(g: &MultiGraph, frame: &Frame, q: &Path) -> bool {
    let fview = frame.view(g);
    let comps = frame_components(g, frame);
    if comps[q.start().0] != comps[q.end().0] {
        return true;
    }
    match fview.distances_from(q.start())[q.end().0] {
        Some(d) => q.len() + d >= frame.ell,
        None => true,
    }
}

/// Adds F-paths until none is addable. Every addition raises `ds`, so the
/// loop runs at most `2|E|` times. With `check` set the frame is
/// re-validated after each step.
pub fn maximize_frame(host: &Subgraph<'_>, frame: Frame, check: bool, budget: &DetectorBudget) -> Result<Frame> {
    let g = host.host();
    let mut frame = frame;
    let cap = 2 * host.edge_count() + 1;
    for _ in 0..cap {
        let Some(q) = find_addable_fpath(host, &frame, budget)? else {
            if check && host.is_connected() {
                crate::ensure_claim!(frame.view(g).is_connected(), "frame connectivity", "fixpoint frame is disconnected");
            }
            return Ok(frame);
        };
        let mut edges = frame.edges.clone();
        for &e in q.edges() {
            edges.insert(e);
        }
        let next = Frame::new(g, edges, frame.ell);
        crate::ensure_claim!(next.ds > frame.ds, "frame growth", "ds did not increase ({} -> {})", frame.ds, next.ds);
        if check {
            next.validate(g)?;
        }
        frame = next;
    }
    Err(Error::claim("frame growth", "augmentation did not terminate"))
}

/// The short `u`–`v` path in the frame. With `check_unique` set, also
/// asserts that no other `u`–`v` path of the frame is short.
pub fn shadow_of_pair(g: &MultiGraph, frame: &Frame, u: VertexId, v: VertexId, check_unique: bool) -> Result<Path> {
    if u == v {
        return Ok(Path::trivial(u));
    }
    let fview = frame.view(g);
    let edges = fview
        .shortest_path(u, v)
        .filter(|p| p.len() < frame.ell)
        .ok_or_else(|| Error::claim("short shadow", format!("no frame path of length < {} between {u} and {v}", frame.ell)))?;
    if check_unique {
        for &e in &edges {
            let alt = fview.without_edges([e]).distances_from(u)[v.0];
            if let Some(d) = alt {
                crate::ensure_claim!(d >= frame.ell, "unique shadow", "{u} and {v} have two short frame paths");
            }
        }
    }
    Path::new(g, u, edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BridgeKind {
    Chord,
    Component,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bridge {
    pub kind: BridgeKind,
    pub edges: EdgeSubset,
    pub feet: Vec<VertexId>,
    pub shadow: EdgeSubset,
}

impl Bridge {
    /// Vertices of the shadow, including a lone foot when the shadow has no edges.
    pub fn shadow_vertices(&self, g: &MultiGraph) -> Vec<VertexId> {
        let mut vs = g.view(self.shadow.clone()).vertices();
        vs.extend(self.feet.iter().copied());
        vs.sort();
        vs.dedup();
        vs
    }
}

/// Checks that `edges` (plus `extra` vertices) form a tree of diameter below `ell`.
pub(crate) fn is_short_tree(g: &MultiGraph, edges: &EdgeSubset, extra: &[VertexId], ell: usize) -> bool {
    let view = g.view(edges.clone());
    let mut verts = view.vertices();
    verts.extend(extra.iter().copied());
    verts.sort();
    verts.dedup();
    if verts.is_empty() {
        return true;
    }
    if edges.len() + 1 != verts.len() || !view.is_connected() {
        return false;
    }
    if edges.is_empty() {
        return true;
    }
    verts.iter().all(|&v| view.distances_from(v).iter().flatten().all(|&d| d < ell))
}

/// Splits `E(host) - E(F)` into chords and attached components, each with
/// its feet on the frame and its shadow in the frame.
pub fn compute_bridges(host: &Subgraph<'_>, frame: &Frame, check_unique: bool) -> Result<Vec<Bridge>> {
    let g = host.host();
    let m = g.edge_count();
    let mut bridges: Vec<Bridge> = Vec::new();
    let mut label = vec![usize::MAX; g.vertex_count()];
    for v in host.vertices() {
        if frame.contains_vertex(v) || label[v.0] != usize::MAX {
            continue;
        }
        let id = bridges.len();
        label[v.0] = id;
        let mut stack = vec![v];
        let mut edges = EdgeSubset::empty(m);
        let mut feet = Vec::new();
        while let Some(x) = stack.pop() {
            for (e, w) in host.incident(x) {
                edges.insert(e);
                if frame.contains_vertex(w) {
                    feet.push(w);
                } else if label[w.0] == usize::MAX {
                    label[w.0] = id;
                    stack.push(w);
                }
            }
        }
        feet.sort();
        feet.dedup();
        bridges.push(Bridge { kind: BridgeKind::Component, edges, feet, shadow: EdgeSubset::empty(m) });
    }
    for e in host.edge_ids() {
        if frame.edges.contains(e) {
            continue;
        }
        let (a, b) = g.endpoints(e);
        if frame.contains_vertex(a) && frame.contains_vertex(b) {
            let mut feet = vec![a, b];
            feet.sort();
            feet.dedup();
            bridges.push(Bridge { kind: BridgeKind::Chord, edges: EdgeSubset::from_ids(m, [e]), feet, shadow: EdgeSubset::empty(m) });
        }
    }
    bridges.sort_by_key(|b| b.edges.first());
    for bridge in bridges.iter_mut() {
        for (i, &x) in bridge.feet.iter().enumerate() {
            for &y in &bridge.feet[i + 1..] {
                let p = shadow_of_pair(g, frame, x, y, check_unique)?;
                for &e in p.edges() {
                    bridge.shadow.insert(e);
                }
            }
        }
        crate::ensure_claim!(
            is_short_tree(g, &bridge.shadow, &bridge.feet, frame.ell),
            "bridge shadow is a short tree",
            "shadow {:?} of bridge at feet {:?}",
            bridge.shadow,
            bridge.feet
        );
    }
    Ok(bridges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::cycle_graph;

    fn b() -> DetectorBudget {
        DetectorBudget::default()
    }

    #[test]
    fn cycle_is_its_own_frame() {
        let g = cycle_graph(7);
        let f = initial_frame(&g.full(), 7, &b()).unwrap();
        assert_eq!(f.edges().len(), 7);
        assert!(f.is_cycle(&g));
        assert_eq!(f.ds(), 0);
        let f2 = maximize_frame(&g.full(), f.clone(), true, &b()).unwrap();
        assert_eq!(f, f2);
        assert!(compute_bridges(&g.full(), &f2, true).unwrap().is_empty());
    }

    #[test]
    fn two_cycles_joined_by_path() {
        // C6 on 0..5, C6 on 6..11, path 0-12-6
        let mut g = cycle_graph(6).disjoint_union(&cycle_graph(6));
        let x = g.add_vertex();
        g.add_edge(VertexId(0), x);
        g.add_edge(x, VertexId(6));
        let f = Frame::new(&g, g.edge_set((0..12).map(EdgeId)), 5);
        assert!(!f.view(&g).is_connected());
        let f = maximize_frame(&g.full(), f, true, &b()).unwrap();
        assert_eq!(f.edges().len(), g.edge_count());
        assert_eq!(f.branch_vertices(), &[VertexId(0), VertexId(6)]);
        assert_eq!(f.ds(), 6);
    }

    #[test]
    fn pendant_cycle_stays_in_a_bridge() {
        let mut g = cycle_graph(6).disjoint_union(&cycle_graph(6));
        g.add_edge(VertexId(0), VertexId(6));
        let f = Frame::new(&g, g.edge_set((0..6).map(EdgeId)), 5);
        let f = maximize_frame(&g.full(), f, false, &b()).unwrap();
        assert_eq!(f.edges().len(), 6);
        let bridges = compute_bridges(&g.full(), &f, true).unwrap();
        assert_eq!(bridges.len(), 1);
        assert_eq!(bridges[0].feet, vec![VertexId(0)]);
        assert!(bridges[0].shadow.is_empty());
    }

    #[test]
    fn short_chord_not_added() {
        let mut g = cycle_graph(12);
        let chord = g.add_edge(VertexId(0), VertexId(2));
        let f = initial_frame(&g.full(), 6, &b()).unwrap();
        let f = maximize_frame(&g.full(), f, true, &b()).unwrap();
        assert!(!f.edges().contains(chord) || f.edges().len() < 13);
        assert!(find_addable_fpath(&g.full(), &f, &b()).unwrap().is_none());
        let bridges = compute_bridges(&g.full(), &f, true).unwrap();
        assert_eq!(bridges.len(), 1);
        assert_eq!(bridges[0].kind, BridgeKind::Chord);
        assert_eq!(bridges[0].shadow.len(), if f.edges().contains(EdgeId(0)) { 2 } else { 1 });
    }

    #[test]
    fn long_fpath_found() {
        // C8 with a 4-edge path between opposite vertices 0 and 4; ell = 6
        let mut g = cycle_graph(8);
        let mut prev = VertexId(0);
        for _ in 0..3 {
            let v = g.add_vertex();
            g.add_edge(prev, v);
            prev = v;
        }
        g.add_edge(prev, VertexId(4));
        let f = Frame::new(&g, g.edge_set((0..8).map(EdgeId)), 6);
        let q = find_addable_fpath(&g.full(), &f, &b()).unwrap().unwrap();
        assert_eq!(q.len(), 4);
        let f = maximize_frame(&g.full(), f, true, &b()).unwrap();
        assert_eq!(f.ds(), 6);
    }

    #[test]
    fn enumeration_agrees_with_search() {
        let mut g = cycle_graph(12);
        g.add_edge(VertexId(0), VertexId(2));
        let x = g.add_vertex();
        g.add_edge(VertexId(3), x);
        g.add_edge(x, VertexId(9));
        let f = Frame::new(&g, g.edge_set((0..12).map(EdgeId)), 6);
        let all = enumerate_fpaths(&g.full(), &f, &b()).unwrap();
        assert_eq!(all.len(), 2);
        let addable: Vec<&Path> = all.iter().filter(|q| is_addable(&g, &f, q)).collect();
        assert_eq!(addable.len(), 1);
        assert_eq!(find_addable_fpath(&g.full(), &f, &b()).unwrap().as_ref(), Some(addable[0]));
    }

    #[test]
    fn shadows() {
        let g = cycle_graph(40);
        let f = Frame::new(&g, EdgeSubset::full(40), 4);
        assert_eq!(shadow_of_pair(&g, &f, VertexId(3), VertexId(3), true).unwrap().len(), 0);
        assert_eq!(shadow_of_pair(&g, &f, VertexId(3), VertexId(4), true).unwrap().edges(), &[EdgeId(3)]);
        assert_eq!(shadow_of_pair(&g, &f, VertexId(38), VertexId(1), true).unwrap().len(), 3);
        assert!(shadow_of_pair(&g, &f, VertexId(0), VertexId(20), true).is_err());
        let g = cycle_graph(6);
        let f = Frame::new(&g, EdgeSubset::full(6), 4);
        assert!(matches!(shadow_of_pair(&g, &f, VertexId(0), VertexId(3), true), Err(Error::ClaimViolated { .. })));
    }
}
