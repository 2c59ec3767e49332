//! The dichotomy solver: recursion on short long cycles and on blocks, then
//! the frame, hub and ear machinery on 2-connected graphs.

mod certificate;
mod extract;

use std::collections::HashMap;

use serde::Serialize;

pub use certificate::{f_bound, verify, verify_hitting_set, verify_packing, Certificate, Stats, Verdict};
pub use extract::{extract_packing, Piece};

use crate::cycles::{find_long_cycle, log2k, pack_cycles_dense, DetectorBudget, LongCycleQuery};
use crate::error::{Error, Result};
use crate::frame::{compute_bridges, initial_frame, maximize_frame, Bridge, BridgeKind, Frame};
use crate::graph::{blocks, suppress_degree2, Cycle, EdgeId, EdgeSubset, MultiGraph, Subgraph, VertexId};
use crate::hubs::{check_hub_closures, check_partition, classify_ears, compute_hubs, thick_thin, u_ears, Hub, HubKind, ThickThin};
use crate::separation::{edge_disjoint_paths, k_perfect_separation, CutResult};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AssertLevel {
    Low,
    High,
    /// High on graphs with at most 24 vertices.
    #[default]
    Auto,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolverConfig {
    pub budget: DetectorBudget,
    pub assert_level: AssertLevel,
    /// Reserved for randomized tie-breaking; the solver is deterministic.
    pub seed: u64,
}

/// One frame-level step, recorded when structure dumps are requested.
#[derive(Clone, Debug, Serialize)]
pub struct StructureDump {
    pub depth: usize,
    pub k: usize,
    pub edges: Vec<EdgeId>,
    pub frame_edges: Vec<EdgeId>,
    pub branch_vertices: Vec<VertexId>,
    pub ds: usize,
    pub bridges: Vec<BridgeDump>,
    pub hubs: Vec<HubDump>,
    pub ears: Vec<EarDump>,
    pub outcome: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct BridgeDump {
    pub kind: BridgeKind,
    pub edges: Vec<EdgeId>,
    pub feet: Vec<VertexId>,
    pub shadow: Vec<EdgeId>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HubDump {
    pub bridges: Vec<usize>,
    pub shadow: Vec<EdgeId>,
    pub gates: Vec<VertexId>,
    pub kind: HubKind,
}

#[derive(Clone, Debug, Serialize)]
pub struct EarDump {
    pub edges: Vec<EdgeId>,
    pub free: Vec<EdgeId>,
    pub ends: Option<(VertexId, VertexId)>,
    /// "thick", "thin" or "covered".
    pub label: &'static str,
}

#[derive(Clone, Debug)]
enum Outcome {
    Packing(Vec<Cycle>),
    Hitting(EdgeSubset),
}

struct Solver<'g> {
    g: &'g MultiGraph,
    ell: usize,
    budget: DetectorBudget,
    high: bool,
    dump: bool,
    memo: HashMap<(EdgeSubset, usize), Outcome>,
    stats: Stats,
    dumps: Vec<StructureDump>,
}

/// Solves `(G, k, ell)`: `k` edge-disjoint long cycles or a hitting set of
/// at most `f_bound(k, ell)` edges.
pub fn solve(g: &MultiGraph, k: usize, ell: usize, cfg: &SolverConfig) -> Result<Certificate> {
    solve_with_structure(g, k, ell, cfg, false).map(|(c, _)| c)
}

/// Like [`solve`], optionally recording the frame-level structures.
pub fn solve_with_structure(
    g: &MultiGraph,
    k: usize,
    ell: usize,
    cfg: &SolverConfig,
    dump: bool,
) -> Result<(Certificate, Vec<StructureDump>)> {
    if k == 0 || ell == 0 {
        return Err(Error::invalid("k and ell must be at least 1"));
    }
    let high = match cfg.assert_level {
        AssertLevel::Low => false,
        AssertLevel::High => true,
        AssertLevel::Auto => g.vertex_count() <= 24,
    };
    let mut s =
        Solver { g, ell, budget: cfg.budget.start_clock(), high, dump, memo: HashMap::new(), stats: Stats::default(), dumps: Vec::new() };
    let outcome = s.solve(EdgeSubset::full(g.edge_count()), k, 0)?;
    let f = f_bound(k, ell);
    let cert = match outcome {
        Outcome::Packing(mut cycles) => {
            crate::ensure_claim!(cycles.len() >= k, "packing size", "{} cycles for k = {k}", cycles.len());
            cycles.truncate(k);
            Certificate::Packing { k, ell, cycles, f_bound: f, stats: s.stats }
        }
        Outcome::Hitting(x) => {
            crate::ensure_claim!(x.len() <= f, "hitting set within the bound", "{} edges, bound {f}", x.len());
            Certificate::HittingSet { k, ell, edges: x.to_vec(), f_bound: f, stats: s.stats }
        }
    };
    Ok((cert, s.dumps))
}

impl<'g> Solver<'g> {
    fn m(&self) -> usize {
        self.g.edge_count()
    }

    fn find(&self, view: &Subgraph<'_>, q: LongCycleQuery) -> Result<Option<Cycle>> {
        find_long_cycle(view, &q, &self.budget)
    }

    fn solve(&mut self, edges: EdgeSubset, k: usize, depth: usize) -> Result<Outcome> {
        self.stats.recursion_depth = self.stats.recursion_depth.max(depth);
        let key = (edges, k);
        if let Some(o) = self.memo.get(&key) {
            return Ok(o.clone());
        }
        let out = self.solve_uncached(key.0.clone(), k, depth)?;
        if let Outcome::Hitting(x) = &out {
            crate::ensure_claim!(
                x.len() <= f_bound(k, self.ell),
                "hitting set within the bound",
                "{} edges at depth {depth}, bound {}",
                x.len(),
                f_bound(k, self.ell)
            );
        }
        self.memo.insert(key, out.clone());
        Ok(out)
    }

    fn solve_uncached(&mut self, edges: EdgeSubset, k: usize, depth: usize) -> Result<Outcome> {
        let g = self.g;
        let ell = self.ell;
        let view = g.view(edges.clone());
        if k == 1 {
            return Ok(match self.find(&view, LongCycleQuery::any_long(ell))? {
                Some(c) => Outcome::Packing(vec![c]),
                None => Outcome::Hitting(EdgeSubset::empty(self.m())),
            });
        }
        if let Some(c) = self.find(&view, LongCycleQuery::length_at_most(ell, 10 * ell))? {
            let ce = c.edge_set(self.m());
            return Ok(match self.solve(edges.difference(&ce), k - 1, depth + 1)? {
                Outcome::Packing(mut cs) => {
                    cs.push(c);
                    Outcome::Packing(cs)
                }
                Outcome::Hitting(x) => Outcome::Hitting(x.union(&ce)),
            });
        }
        let relevant = self.edges_on_long_cycles(&view)?;
        if relevant.is_empty() {
            return Ok(Outcome::Hitting(EdgeSubset::empty(self.m())));
        }
        let view = g.view(relevant.clone());
        let bs = blocks(&view);
        if bs.len() > 1 {
            return self.split_block(&relevant, &bs[0], k, depth);
        }
        self.frame_step(&view, k, depth)
    }

    /// Edges on at least one long cycle.
    fn edges_on_long_cycles(&self, view: &Subgraph<'_>) -> Result<EdgeSubset> {
        let mut marked = EdgeSubset::empty(self.m());
        let mut dead = EdgeSubset::empty(self.m());
        for e in view.edge_ids() {
            if marked.contains(e) || dead.contains(e) {
                continue;
            }
            let pruned = view.without(&dead);
            match self.find(&pruned, LongCycleQuery::through_edge(self.ell, e))? {
                Some(c) => c.edges().iter().for_each(|&f| marked.insert(f)),
                None => dead.insert(e),
            }
        }
        Ok(marked)
    }

    /// Solves one block `b` for growing `j` until it yields a hitting set,
    /// then solves the rest with the remaining demand.
    fn split_block(&mut self, edges: &EdgeSubset, b: &EdgeSubset, k: usize, depth: usize) -> Result<Outcome> {
        let mut best: Vec<Cycle> = Vec::new();
        let mut x1 = EdgeSubset::empty(self.m());
        for j in 1..=k {
            match self.solve(b.clone(), j, depth + 1)? {
                Outcome::Packing(cs) => {
                    if j == k {
                        return Ok(Outcome::Packing(cs));
                    }
                    best = cs;
                }
                Outcome::Hitting(x) => {
                    x1 = x;
                    break;
                }
            }
        }
        let kp = best.len();
        Ok(match self.solve(edges.difference(b), k - kp, depth + 1)? {
            Outcome::Packing(cs) => {
                best.extend(cs);
                Outcome::Packing(best)
            }
            Outcome::Hitting(x2) => Outcome::Hitting(x1.union(&x2)),
        })
    }

    fn frame_step(&mut self, view: &Subgraph<'g>, k: usize, depth: usize) -> Result<Outcome> {
        let g = self.g;
        let ell = self.ell;
        let frame = initial_frame(view, ell, &self.budget)?;
        let frame = maximize_frame(view, frame, self.high, &self.budget)?;
        if self.high {
            frame.validate(g)?;
        }
        crate::ensure_claim!(frame.view(g).is_connected(), "frame is connected", "fixpoint frame on a 2-connected graph is disconnected");
        self.stats.ds = self.stats.ds.max(frame.ds());
        let mut dump = self.dump.then(|| StructureDump {
            depth,
            k,
            edges: view.edges().to_vec(),
            frame_edges: frame.edges().to_vec(),
            branch_vertices: frame.branch_vertices().to_vec(),
            ds: frame.ds(),
            bridges: Vec::new(),
            hubs: Vec::new(),
            ears: Vec::new(),
            outcome: String::new(),
        });
        let result = self.frame_outcome(view, &frame, k, dump.as_mut());
        if let (Some(mut d), Ok(o)) = (dump, &result) {
            if d.outcome.is_empty() {
                d.outcome = match o {
                    Outcome::Packing(_) => "packing".into(),
                    Outcome::Hitting(_) => "hitting_set".into(),
                };
            }
            self.dumps.push(d);
        }
        result
    }

    fn frame_outcome(&mut self, view: &Subgraph<'g>, frame: &Frame, k: usize, mut dump: Option<&mut StructureDump>) -> Result<Outcome> {
        let g = self.g;
        let ell = self.ell;
        if frame.ds() as f64 >= 84.0 * k as f64 * log2k(k) {
            let (reduced, map) = suppress_degree2(&frame.view(g));
            let cycles = pack_cycles_dense(&reduced.full(), k)?;
            let mut out = Vec::with_capacity(k);
            for c in &cycles {
                let c = map.expand(c);
                crate::ensure_claim!(c.is_valid_in(g) && c.len() >= ell, "frame cycles are long", "expanded cycle of length {}", c.len());
                out.push(c);
            }
            if let Some(d) = dump {
                d.outcome = "dense_frame".into();
            }
            return Ok(Outcome::Packing(out));
        }
        let bridges = compute_bridges(view, frame, self.high)?;
        let hubs = compute_hubs(g, frame, &bridges)?;
        self.stats.hubs = self.stats.hubs.max(hubs.len());
        if self.high {
            check_hub_closures(g, &hubs, ell, &self.budget)?;
        }
        if let Some(d) = dump.as_deref_mut() {
            d.bridges = bridges.iter().map(bridge_dump).collect();
            d.hubs = hubs.iter().map(hub_dump).collect();
        }
        if frame.is_cycle(g) {
            self.cycle_frame(view, frame, &hubs, k)
        } else {
            self.general_frame(view, frame, &hubs, k, dump)
        }
    }

    /// The frame is a single cycle: split it at the ends of one hub shadow.
    fn cycle_frame(&mut self, view: &Subgraph<'g>, frame: &Frame, hubs: &[Hub], k: usize) -> Result<Outcome> {
        let g = self.g;
        let m = self.m();
        let Some(h0) = hubs.first() else {
            crate::ensure_claim!(view.edges() == frame.edges(), "a cycle frame without hubs is the graph", "edges outside the frame");
            let e = frame.edges().first().unwrap();
            return Ok(Outcome::Hitting(EdgeSubset::from_ids(m, [e])));
        };
        let sview = g.view(h0.shadow.clone());
        let ends: Vec<VertexId> = sview.vertices().into_iter().filter(|&v| sview.degree(v) == 1).collect();
        crate::ensure_claim!(ends.len() == 2, "hub shadows on a cycle frame are paths", "shadow with {} ends", ends.len());
        let (u1, u2) = (ends[0], ends[1]);
        let arcs = [h0.shadow.clone(), frame.edges().difference(&h0.shadow)];
        let mut sides = [arcs[0].clone(), arcs[1].clone()];
        for (i, h) in hubs.iter().enumerate() {
            let side = arcs.iter().position(|a| h.shadow.is_subset(a));
            let side =
                side.ok_or_else(|| Error::claim("hub shadows avoid the split vertices", format!("hub {i} straddles {u1} or {u2}")))?;
            sides[side].union_with(&h.closure);
        }
        crate::ensure_claim!(
            sides[0].is_disjoint(&sides[1]) && &sides[0].union(&sides[1]) == view.edges(),
            "the two sides partition the graph",
            "side edge sets overlap or miss edges"
        );
        let mut systems = Vec::with_capacity(2);
        for side in &sides {
            match edge_disjoint_paths(&g.view(side.clone()), u1, u2, k)? {
                CutResult::Cut(x) => return Ok(Outcome::Hitting(x)),
                CutResult::Paths(ps) => systems.push(ps.paths),
            }
        }
        let mut out = Vec::with_capacity(k);
        for (p, q) in systems[0].iter().zip(&systems[1]) {
            let mut edges = p.edges().to_vec();
            edges.extend(q.edges().iter().rev());
            let c = Cycle::new(g, edges).map_err(|e| Error::claim("paths from both sides form cycles", e.to_string()))?;
            crate::ensure_claim!(c.len() >= self.ell, "cycles through several hubs are long", "cycle of length {}", c.len());
            out.push(c);
        }
        Ok(Outcome::Packing(out))
    }

    fn general_frame(
        &mut self,
        view: &Subgraph<'g>,
        frame: &Frame,
        hubs: &[Hub],
        k: usize,
        dump: Option<&mut StructureDump>,
    ) -> Result<Outcome> {
        let g = self.g;
        let m = self.m();
        let ds = frame.ds();
        let ears = u_ears(g, frame)?;
        let closures = classify_ears(g, frame, hubs, &ears)?;
        check_partition(view, hubs, &closures)?;
        let vertex_hubs: Vec<&Hub> = hubs.iter().filter(|h| h.kind == HubKind::VertexHub).collect();
        let gate_total: usize = vertex_hubs.iter().map(|h| h.gates.len()).sum();
        crate::ensure_claim!(gate_total <= 2 * ds, "gate count", "{gate_total} gates for ds = {ds}");
        let mut boundary: Vec<VertexId> = vertex_hubs.iter().flat_map(|h| h.gates.iter().copied()).collect();
        boundary.extend(closures.iter().flat_map(|c| [c.u, c.v]));
        boundary.sort();
        boundary.dedup();
        let boundary_of = |set: &EdgeSubset| -> Vec<VertexId> {
            let vs = g.view(set.clone()).vertex_mask();
            boundary.iter().copied().filter(|v| vs[v.0]).collect()
        };

        let mut labels = vec!["covered"; ears.len()];
        let mut xp = EdgeSubset::empty(m);
        let mut pieces = Vec::new();
        for c in &closures {
            match thick_thin(g, c, k)? {
                ThickThin::Thin(x) => {
                    xp.union_with(&x);
                    labels[c.ear] = "thin";
                }
                ThickThin::Thick(_) => {
                    pieces.push(Piece { edges: c.closure.clone(), boundary: boundary_of(&c.closure) });
                    labels[c.ear] = "thick";
                }
            }
        }
        crate::ensure_claim!(2 * xp.len() <= k * ds, "thin-ear cuts are few", "{} edges for ds = {ds}", xp.len());
        let mut xv = EdgeSubset::empty(m);
        let mut xv_bound = 0;
        for h in &vertex_hubs {
            let hv = g.view(h.closure.clone());
            let xh = k_perfect_separation(&hv, &h.gates, k)?;
            xv_bound += h.gates.len().saturating_sub(1) * (k - 1);
            for comp in hv.without(&xh).component_edge_sets() {
                if !comp.is_empty() {
                    let b = boundary_of(&comp);
                    pieces.push(Piece { edges: comp, boundary: b });
                }
            }
            xv.union_with(&xh);
        }
        crate::ensure_claim!(xv.len() <= xv_bound, "gate separations are small", "{} edges, bound {xv_bound}", xv.len());
        if let Some(d) = dump {
            d.ears = ears
                .iter()
                .enumerate()
                .map(|(i, e)| {
                    let c = closures.iter().find(|c| c.ear == i);
                    EarDump {
                        edges: e.path.edges().to_vec(),
                        free: c.map(|c| c.free.edges().to_vec()).unwrap_or_default(),
                        ends: c.map(|c| (c.u, c.v)),
                        label: labels[i],
                    }
                })
                .collect();
        }
        let x = xp.union(&xv);
        let rest = view.without(&x);
        match self.find(&rest, LongCycleQuery::any_long(self.ell))? {
            None => Ok(Outcome::Hitting(x)),
            Some(c) => Ok(Outcome::Packing(extract_packing(g, &pieces, c, k, self.ell)?)),
        }
    }
}

fn bridge_dump(b: &Bridge) -> BridgeDump {
    BridgeDump { kind: b.kind, edges: b.edges.to_vec(), feet: b.feet.clone(), shadow: b.shadow.to_vec() }
}

fn hub_dump(h: &Hub) -> HubDump {
    HubDump { bridges: h.bridges.clone(), shadow: h.shadow.to_vec(), gates: h.gates.clone(), kind: h.kind }
}
