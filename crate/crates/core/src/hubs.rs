//! Hubs (bridges grouped by overlapping shadows), U-ears of the frame, ear
//! closures and the thick/thin split of ears.

use crate::cycles::{has_long_cycle, DetectorBudget};
use crate::error::{Error, Result};
use crate::frame::{is_short_tree, Bridge, Frame};
use crate::graph::{EdgeId, EdgeSubset, MultiGraph, Path, Subgraph, VertexId};
use crate::separation::{edge_disjoint_paths, CutResult, PathSystem};
use crate::unionfind::UnionFind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HubKind {
    VertexHub,
    PathHub,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hub {
    /// Indices into the bridge list the hub was built from.
    pub bridges: Vec<usize>,
    /// Union of the member bridges.
    pub edges: EdgeSubset,
    pub shadow: EdgeSubset,
    /// `edges ∪ shadow`.
    pub closure: EdgeSubset,
    /// Shadow vertices with a frame edge outside the shadow.
    pub gates: Vec<VertexId>,
    pub kind: HubKind,
    /// Shadow vertices, feet included.
    pub shadow_vertices: Vec<VertexId>,
}

/// Groups bridges whose shadows share an edge.
pub fn compute_hubs(g: &MultiGraph, frame: &Frame, bridges: &[Bridge]) -> Result<Vec<Hub>> {
    let m = g.edge_count();
    let mut uf = UnionFind::new(bridges.len());
    let mut owner: Vec<Option<usize>> = vec![None; m];
    for (i, b) in bridges.iter().enumerate() {
        for e in b.shadow.iter() {
            match owner[e.0] {
                Some(j) => {
                    uf.union(i, j);
                }
                None => owner[e.0] = Some(i),
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot: Vec<Option<usize>> = vec![None; bridges.len()];
    for i in 0..bridges.len() {
        let r = uf.find(i);
        let s = *slot[r].get_or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[s].push(i);
    }
    let mut hubs = Vec::with_capacity(groups.len());
    let mut used = EdgeSubset::empty(m);
    for members in groups {
        let mut edges = EdgeSubset::empty(m);
        let mut shadow = EdgeSubset::empty(m);
        let mut feet = Vec::new();
        for &i in &members {
            edges.union_with(&bridges[i].edges);
            shadow.union_with(&bridges[i].shadow);
            feet.extend(bridges[i].feet.iter().copied());
        }
        feet.sort();
        feet.dedup();
        crate::ensure_claim!(
            is_short_tree(g, &shadow, &feet, usize::MAX),
            "hub shadow is a tree",
            "hub of bridges {members:?} has shadow {shadow:?}"
        );
        let closure = edges.union(&shadow);
        crate::ensure_claim!(closure.is_disjoint(&used), "hub closures are edge-disjoint", "hub of bridges {members:?}");
        used.union_with(&closure);
        let mut shadow_vertices = g.view(shadow.clone()).vertices();
        shadow_vertices.extend(feet);
        shadow_vertices.sort();
        shadow_vertices.dedup();
        let kind = if shadow_vertices.iter().any(|&v| frame.is_branch(v)) { HubKind::VertexHub } else { HubKind::PathHub };
        let mut hub = Hub { bridges: members, edges, shadow, closure, gates: Vec::new(), kind, shadow_vertices };
        hub.gates = gates_of(g, frame, &hub);
        hubs.push(hub);
    }
    Ok(hubs)
}

/// The shadow vertices of `hub` that have a frame edge outside its shadow.
pub fn gates_of(g: &MultiGraph, frame: &Frame, hub: &Hub) -> Vec<VertexId> {
    let fview = frame.view(g);
    hub.shadow_vertices.iter().copied().filter(|&v| fview.incident(v).any(|(e, _)| !hub.shadow.contains(e))).collect()
}

/// Asserts that no hub closure contains a long cycle.
pub fn check_hub_closures(g: &MultiGraph, hubs: &[Hub], ell: usize, budget: &DetectorBudget) -> Result<()> {
    for (i, h) in hubs.iter().enumerate() {
        crate::ensure_claim!(
            !has_long_cycle(&g.view(h.closure.clone()), ell, budget)?,
            "hub closures have no long cycle",
            "closure of hub {i} contains a long cycle"
        );
    }
    Ok(())
}

/// A path of the frame between branch vertices with no branch vertex inside,
/// or a cycle of the frame through exactly one branch vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UEar {
    pub path: Path,
}

impl UEar {
    pub fn is_cycle(&self) -> bool {
        self.path.is_closed()
    }
}

/// Splits the frame into U-ears. Ears are found from their smaller end;
/// ear-cycles are oriented so that the first edge has the smaller id.
pub fn u_ears(g: &MultiGraph, frame: &Frame) -> Result<Vec<UEar>> {
    if frame.branch_vertices().is_empty() {
        return Err(Error::invalid("a frame without branch vertices has no U-ears"));
    }
    let fview = frame.view(g);
    let mut used = EdgeSubset::empty(g.edge_count());
    let mut ears = Vec::new();
    for &u in frame.branch_vertices() {
        let mut first: Vec<EdgeId> = fview.incident(u).map(|(e, _)| e).collect();
        first.sort();
        for e0 in first {
            if used.contains(e0) {
                continue;
            }
            let mut edges = vec![e0];
            used.insert(e0);
            let mut at = g.other(e0, u);
            while !frame.is_branch(at) {
                let next = fview.incident(at).map(|(e, _)| e).find(|&e| !used.contains(e));
                let Some(e) = next else {
                    return Err(Error::claim("frame degree", format!("dead end at {at} while tracing an ear")));
                };
                used.insert(e);
                edges.push(e);
                at = g.other(e, at);
            }
            let mut path = Path::new(g, u, edges)?;
            if path.is_closed() && path.edges().last() < path.edges().first() {
                path = path.reversed();
            }
            ears.push(UEar { path });
        }
    }
    crate::ensure_claim!(
        used.len() == frame.edges().len(),
        "frame is a union of U-ears",
        "ears cover {} of {} edges",
        used.len(),
        frame.edges().len()
    );
    Ok(ears)
}

/// The part of a U-ear outside all vertex-hub closures, together with the
/// path-hubs hanging off it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EarClosure {
    /// Index into the ear list.
    pub ear: usize,
    pub u: VertexId,
    pub v: VertexId,
    pub free: Path,
    pub closure: EdgeSubset,
    /// Indices into the hub list.
    pub path_hubs: Vec<usize>,
}

/// Ears with a non-empty free part and their closures.
pub fn classify_ears(g: &MultiGraph, frame: &Frame, hubs: &[Hub], ears: &[UEar]) -> Result<Vec<EarClosure>> {
    let m = g.edge_count();
    let mut covered = EdgeSubset::empty(m);
    let mut av: Vec<VertexId> = Vec::new();
    for h in hubs.iter().filter(|h| h.kind == HubKind::VertexHub) {
        covered.union_with(&h.closure);
        av.extend(h.gates.iter().copied());
    }
    av.sort();
    av.dedup();
    let mut assigned = vec![false; hubs.len()];
    let mut out = Vec::new();
    for (idx, ear) in ears.iter().enumerate() {
        let edges = ear.path.edges();
        let verts = ear.path.vertices(g);
        let free: Vec<bool> = edges.iter().map(|&e| !covered.contains(e)).collect();
        let starts = (0..edges.len()).filter(|&i| free[i] && (i == 0 || !free[i - 1])).count();
        if starts == 0 {
            continue;
        }
        crate::ensure_claim!(starts == 1, "ears have one free part", "ear {idx} has {starts} free segments");
        let a = free.iter().position(|&f| f).unwrap();
        let b = free.iter().rposition(|&f| f).unwrap() + 1;
        let free_path = Path::new(g, verts[a], edges[a..b].to_vec())?;
        let (u, v) = (free_path.start(), free_path.end());
        for x in [u, v] {
            crate::ensure_claim!(
                frame.is_branch(x) || av.binary_search(&x).is_ok(),
                "free part ends at gates or branch vertices",
                "ear {idx} free part ends at {x}"
            );
        }
        let free_set = free_path.edge_set(m);
        let free_verts = &verts[a..=b];
        let mut closure = free_set.clone();
        let mut path_hubs = Vec::new();
        for (i, h) in hubs.iter().enumerate() {
            if h.kind != HubKind::PathHub || assigned[i] {
                continue;
            }
            let inside =
                if h.shadow.is_empty() { h.shadow_vertices.iter().all(|x| free_verts.contains(x)) } else { h.shadow.is_subset(&free_set) };
            if inside {
                assigned[i] = true;
                closure.union_with(&h.closure);
                path_hubs.push(i);
            }
        }
        out.push(EarClosure { ear: idx, u, v, free: free_path, closure, path_hubs });
    }
    if let Some(i) = assigned.iter().enumerate().position(|(i, &a)| !a && hubs[i].kind == HubKind::PathHub) {
        return Err(Error::claim("path-hubs lie on free parts", format!("hub {i} lies on no free ear part")));
    }
    Ok(out)
}

/// Checks that vertex-hub closures and ear closures partition `E(host)`.
pub fn check_partition(host: &Subgraph<'_>, hubs: &[Hub], ears: &[EarClosure]) -> Result<()> {
    let m = host.host().edge_count();
    let mut seen = EdgeSubset::empty(m);
    let parts = hubs.iter().filter(|h| h.kind == HubKind::VertexHub).map(|h| &h.closure).chain(ears.iter().map(|p| &p.closure));
    for part in parts {
        crate::ensure_claim!(part.is_disjoint(&seen), "closures partition the graph", "closures overlap");
        seen.union_with(part);
    }
    crate::ensure_claim!(
        &seen == host.edges(),
        "closures partition the graph",
        "closures cover {} of {} edges",
        seen.len(),
        host.edge_count()
    );
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThickThin {
    Thick(PathSystem),
    Thin(EdgeSubset),
}

/// `k` edge-disjoint `u`–`v` paths in the closure, or a cut of fewer than `k`
/// edges. When `u == v` the free part is a cycle through `u`; the last free
/// edge is then moved to a copy of `u` and closed walks through `u` are
/// counted as paths between the two copies.
pub fn thick_thin(g: &MultiGraph, ear: &EarClosure, k: usize) -> Result<ThickThin> {
    let (u, v) = (ear.u, ear.v);
    if u != v {
        return Ok(match edge_disjoint_paths(&g.view(ear.closure.clone()), u, v, k)? {
            CutResult::Paths(ps) => ThickThin::Thick(ps),
            CutResult::Cut(cut) => ThickThin::Thin(cut),
        });
    }
    let last = *ear.free.edges().last().ok_or_else(|| Error::invalid("empty free part"))?;
    let split = VertexId(g.vertex_count());
    let mut aux = MultiGraph::new(g.vertex_count() + 1);
    for e in g.edges() {
        let (a, b) = g.endpoints(e);
        if e == last {
            let (a, b) = if a == u { (split, b) } else { (a, split) };
            aux.add_edge(a, b);
        } else {
            aux.add_edge(a, b);
        }
    }
    Ok(match edge_disjoint_paths(&aux.view(ear.closure.clone()), u, split, k)? {
        CutResult::Paths(ps) => {
            let paths = ps.paths.into_iter().map(|p| Path::new(g, u, p.into_edges())).collect::<Result<Vec<_>>>()?;
            ThickThin::Thick(PathSystem { s: u, t: u, paths })
        }
        CutResult::Cut(cut) => ThickThin::Thin(cut),
    })
}
