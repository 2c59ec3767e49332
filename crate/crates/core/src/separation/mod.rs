//! Edge connectivity: unit-capacity max-flow, edge-disjoint path systems,
//! minimum cuts, the relation "joined by k edge-disjoint paths", and
//! separations of vertex sets into k-connected groups.

mod flow;

use std::collections::BTreeMap;

pub use flow::{max_flow_between, FlowOutcome};

use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, Path, Subgraph, VertexId};
use crate::unionfind::UnionFind;

/// Pairwise edge-disjoint `s`–`t` paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSystem {
    pub s: VertexId,
    pub t: VertexId,
    pub paths: Vec<Path>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CutResult {
    Paths(PathSystem),
    /// A minimum cut, smaller than the requested number of paths.
    Cut(EdgeSubset),
}

/// `k` edge-disjoint `s`–`t` paths if they exist, otherwise a minimum
/// `s`–`t` edge cut (of size below `k`).
pub fn edge_disjoint_paths(view: &Subgraph<'_>, s: VertexId, t: VertexId, k: usize) -> Result<CutResult> {
    if s == t {
        return Err(Error::invalid("source and sink coincide"));
    }
    if k == 0 {
        return Err(Error::invalid("k must be at least 1"));
    }
    match max_flow_between(view, &[s], &[t], k)? {
        FlowOutcome::Saturated(flow) => Ok(CutResult::Paths(PathSystem { s, t, paths: flow.decompose(view, s, t, k)? })),
        FlowOutcome::Cut(cut) => Ok(CutResult::Cut(cut)),
    }
}

/// `u` and `v` are equal or joined by `k` edge-disjoint paths.
pub fn sim_k(view: &Subgraph<'_>, u: VertexId, v: VertexId, k: usize) -> Result<bool> {
    if u == v {
        return Ok(true);
    }
    Ok(matches!(max_flow_between(view, &[u], &[v], k)?, FlowOutcome::Saturated(_)))
}

fn validate_sets(sets: &[Vec<VertexId>], n: usize) -> Result<()> {
    let mut owner = vec![usize::MAX; n];
    for (i, set) in sets.iter().enumerate() {
        if set.is_empty() {
            return Err(Error::invalid(format!("vertex set {i} is empty")));
        }
        for v in set {
            if v.0 >= n {
                return Err(Error::invalid(format!("{v} out of range")));
            }
            if owner[v.0] != usize::MAX && owner[v.0] != i {
                return Err(Error::invalid(format!("{v} lies in two vertex sets")));
            }
            owner[v.0] = i;
        }
    }
    Ok(())
}

/// Partition of the given sets by the components of `view` after each set is
/// merged into one node; groups are listed by their smallest set index.
fn group_sets(view: &Subgraph<'_>, sets: &[Vec<VertexId>]) -> (Vec<Vec<usize>>, Vec<EdgeSubset>) {
    let g = view.host();
    let mut uf = UnionFind::new(g.vertex_count());
    for e in view.edge_ids() {
        let (a, b) = g.endpoints(e);
        uf.union(a.0, b.0);
    }
    for set in sets {
        for w in set.windows(2) {
            uf.union(w[0].0, w[1].0);
        }
    }
    let mut by_root: BTreeMap<usize, usize> = BTreeMap::new();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, set) in sets.iter().enumerate() {
        let r = uf.find(set[0].0);
        let gi = *by_root.entry(r).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[gi].push(i);
    }
    let mut edges = vec![EdgeSubset::empty(g.edge_count()); groups.len()];
    for e in view.edge_ids() {
        let r = uf.find(g.endpoints(e).0 .0);
        if let Some(&gi) = by_root.get(&r) {
            edges[gi].insert(e);
        }
    }
    (groups, edges)
}

/// Edges whose deletion leaves no path between any two of the given sets.
/// The sets must be pairwise separable by fewer than `k` edges once each is
/// merged into one node; the result has at most `(p-1)(k-1)` edges.
pub fn separate_class_sets(view: &Subgraph<'_>, sets: &[Vec<VertexId>], k: usize) -> Result<EdgeSubset> {
    if k == 0 {
        return Err(Error::invalid("k must be at least 1"));
    }
    validate_sets(sets, view.host().vertex_count())?;
    let x = separate_rec(view, sets, k)?;
    let bound = (sets.len().saturating_sub(1)) * (k - 1);
    crate::ensure_claim!(x.len() <= bound, "class separation size", "{} edges exceed (p-1)(k-1) = {bound}", x.len());
    Ok(x)
}

fn separate_rec(view: &Subgraph<'_>, sets: &[Vec<VertexId>], k: usize) -> Result<EdgeSubset> {
    let m = view.host().edge_count();
    if sets.len() <= 1 {
        return Ok(EdgeSubset::empty(m));
    }
    let cut = match flow::max_flow_contracted(view, sets, 0, 1, k)? {
        FlowOutcome::Cut(cut) => cut,
        FlowOutcome::Saturated(_) => {
            return Err(Error::invalid(format!("vertex sets 0 and 1 are joined by {k} edge-disjoint paths")));
        }
    };
    let rest = view.without(&cut);
    let (groups, edges) = group_sets(&rest, sets);
    crate::ensure_claim!(groups.len() >= 2, "class separation", "cut did not split the first two sets");
    let mut x = cut;
    for (grp, es) in groups.iter().zip(edges) {
        let sub_sets: Vec<Vec<VertexId>> = grp.iter().map(|&i| sets[i].clone()).collect();
        x.union_with(&separate_rec(&rest.restrict(&es), &sub_sets, k)?);
    }
    Ok(x)
}

/// Edges `X`, at most `(|A|-1)(k-1)` of them, such that any two vertices of
/// `A` in the same component of `view - X` are joined there by `k`
/// edge-disjoint paths.
pub fn k_perfect_separation(view: &Subgraph<'_>, a: &[VertexId], k: usize) -> Result<EdgeSubset> {
    if k == 0 {
        return Err(Error::invalid("k must be at least 1"));
    }
    let mut verts = a.to_vec();
    verts.sort();
    verts.dedup();
    if let Some(v) = verts.iter().find(|v| v.0 >= view.host().vertex_count()) {
        return Err(Error::invalid(format!("{v} out of range")));
    }
    let x = perfect_rec(view, &verts, k)?;
    let bound = verts.len().saturating_sub(1) * (k - 1);
    crate::ensure_claim!(x.len() <= bound, "perfect separation size", "{} edges exceed (|A|-1)(k-1) = {bound}", x.len());
    Ok(x)
}

/// Partition of `a` into classes of the "k edge-disjoint paths" relation.
pub fn sim_k_classes(view: &Subgraph<'_>, a: &[VertexId], k: usize) -> Result<Vec<Vec<VertexId>>> {
    let mut classes: Vec<Vec<VertexId>> = Vec::new();
    'outer: for &v in a {
        for class in classes.iter_mut() {
            if sim_k(view, class[0], v, k)? {
                class.push(v);
                continue 'outer;
            }
        }
        classes.push(vec![v]);
    }
    Ok(classes)
}

fn perfect_rec(view: &Subgraph<'_>, a: &[VertexId], k: usize) -> Result<EdgeSubset> {
    let m = view.host().edge_count();
    let classes = sim_k_classes(view, a, k)?;
    if classes.len() <= 1 {
        return Ok(EdgeSubset::empty(m));
    }
    let mut x = separate_rec(view, &classes, k)?;
    let rest = view.without(&x);
    let (groups, edges) = group_sets(&rest, &classes);
    for (grp, es) in groups.iter().zip(edges) {
        crate::ensure_claim!(grp.len() == 1, "class separation", "two classes remain connected");
        let sub = rest.restrict(&es);
        x.union_with(&perfect_rec(&sub, &classes[grp[0]], k)?);
    }
    Ok(x)
}

/// Checks the defining property of a k-perfect separation.
pub fn is_k_perfect_separation(view: &Subgraph<'_>, a: &[VertexId], k: usize, x: &EdgeSubset) -> Result<bool> {
    let rest = view.without(x);
    let g = view.host();
    let mut uf = UnionFind::new(g.vertex_count());
    for e in rest.edge_ids() {
        let (p, q) = g.endpoints(e);
        uf.union(p.0, q.0);
    }
    for (i, &u) in a.iter().enumerate() {
        for &v in &a[i + 1..] {
            if uf.find(u.0) == uf.find(v.0) && !sim_k(&rest, u, v, k)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
