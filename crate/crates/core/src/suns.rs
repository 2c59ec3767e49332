//! Suns: a clique on `p = floor(2(ell-1)/3)` vertices with a rim of degree-2
//! vertices. A sun has no two edge-disjoint long cycles, yet for `ell >= 30`
//! no `ell/30` edges meet all of its long cycles.

use serde::Serialize;

use crate::cycles::{oracle_max_packing, DetectorBudget};
use crate::error::{Error, Result};
use crate::graph::{Cycle, EdgeId, EdgeSubset, MultiGraph, VertexId};

pub fn sun_p(ell: usize) -> usize {
    2 * ell.saturating_sub(1) / 3
}

/// Clique vertex `v_i`.
pub fn sun_v(_ell: usize, i: usize) -> VertexId {
    VertexId(i)
}

/// Rim vertex `w_i`, adjacent to `v_{i-1}` and `v_i`.
pub fn sun_w(ell: usize, i: usize) -> VertexId {
    VertexId(sun_p(ell) + i)
}

/// The sun for threshold `ell`: vertices `v_0..v_{p-1}` then `w_0..w_{p-1}`;
/// clique edges first in lexicographic order, then `w_i v_{i-1}`, `w_i v_i`.
pub fn make_sun(ell: usize) -> Result<MultiGraph> {
    if ell < 4 {
        return Err(Error::invalid(format!("suns need ell >= 4, got {ell}")));
    }
    let p = sun_p(ell);
    let mut g = MultiGraph::new(2 * p);
    for i in 0..p {
        for j in i + 1..p {
            g.add_edge(VertexId(i), VertexId(j));
        }
    }
    for i in 0..p {
        g.add_edge(VertexId(p + i), VertexId((i + p - 1) % p));
        g.add_edge(VertexId(p + i), VertexId(i));
    }
    Ok(g)
}

/// `k - 1` disjoint suns: no `k` edge-disjoint long cycles.
pub fn make_lower_bound_family(k: usize, ell: usize) -> Result<MultiGraph> {
    if k < 2 {
        return Err(Error::invalid("the lower-bound family needs k >= 2"));
    }
    let sun = make_sun(ell)?;
    let mut g = MultiGraph::new(0);
    for _ in 1..k {
        g = g.disjoint_union(&sun);
    }
    Ok(g)
}

fn clique_edge(g: &MultiGraph, a: usize, b: usize) -> EdgeId {
    let (a, b) = (VertexId(a), VertexId(b));
    *g.incident(a).iter().find(|&&e| g.other(e, a) == b).expect("clique edge present")
}

/// A long cycle of the sun avoiding `x`, built as a Hamilton cycle of the sun
/// minus the endpoints of `x` and the rim neighbours of deleted clique vertices.
pub fn sun_witness_after_deletion(ell: usize, x: &EdgeSubset) -> Result<Cycle> {
    if ell < 30 {
        return Err(Error::invalid(format!("witnesses need ell >= 30, got {ell}")));
    }
    let g = make_sun(ell)?;
    let p = sun_p(ell);
    if x.universe() != g.edge_count() {
        return Err(Error::invalid("edge set is not over the sun's edges"));
    }
    if x.len() > ell / 30 {
        return Err(Error::invalid(format!("{} edges exceed ell/30 = {}", x.len(), ell / 30)));
    }
    let mut deleted = vec![false; 2 * p];
    for e in x.iter() {
        let (a, b) = g.endpoints(e);
        deleted[a.0] = true;
        deleted[b.0] = true;
    }
    for i in 0..p {
        if deleted[i] {
            deleted[p + i] = true;
            deleted[p + (i + 1) % p] = true;
        }
    }
    let removed = deleted.iter().filter(|&&d| d).count();
    crate::ensure_claim!(5 * removed <= ell, "few deleted vertices", "{removed} vertices deleted for ell = {ell}");

    // rim edge from w_j to v_{j-1} is 2j-th after the clique, to v_j the next one
    let rim = |j: usize, back: bool| EdgeId(p * (p - 1) / 2 + 2 * (j % p) + usize::from(!back));
    let mut edges = Vec::new();
    match (0..p).find(|&i| deleted[i]) {
        None => {
            for i in 0..p {
                edges.push(rim(i + 1, true));
                edges.push(rim(i + 1, false));
            }
        }
        Some(d) => {
            // clique paths of C - U in cyclic order starting after a deleted vertex
            let mut runs: Vec<(usize, usize)> = Vec::new();
            let mut cur: Option<(usize, usize)> = None;
            for off in 1..=p {
                let i = (d + off) % p;
                if deleted[i] {
                    runs.extend(cur.take());
                } else {
                    cur = Some(cur.map_or((i, i), |(s, _)| (s, i)));
                }
            }
            runs.extend(cur);
            for (r, &(s, t)) in runs.iter().enumerate() {
                let mut i = s;
                while i != t {
                    let j = (i + 1) % p;
                    edges.push(rim(j, true));
                    edges.push(rim(j, false));
                    i = j;
                }
                let next = runs[(r + 1) % runs.len()].0;
                edges.push(clique_edge(&g, t, next));
            }
        }
    }
    let c = Cycle::new(&g, edges).map_err(|e| Error::claim("rim detours form a cycle", e.to_string()))?;
    crate::ensure_claim!(c.edges().iter().all(|&e| !x.contains(e)), "witness avoids the deleted edges", "cycle uses an edge of X");
    crate::ensure_claim!(
        c.len() == 2 * p - removed,
        "witness is Hamiltonian",
        "length {} but {} vertices remain",
        c.len(),
        2 * p - removed
    );
    crate::ensure_claim!(c.len() >= ell, "witness is long", "length {} < {ell}", c.len());
    Ok(c)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SunReport {
    pub ell: usize,
    pub p: usize,
    pub n: usize,
    pub m: usize,
    /// Maximum number of edge-disjoint long cycles, when computed.
    pub packing_number: Option<usize>,
    pub deletions_checked: usize,
    pub shortest_witness: Option<usize>,
    pub ok: bool,
}

/// Below 30 computes the packing number by exhaustive search; from 30 on
/// builds a witness for every single-edge deletion.
pub fn check_sun_properties(ell: usize, budget: &DetectorBudget) -> Result<SunReport> {
    let g = make_sun(ell)?;
    let mut report = SunReport {
        ell,
        p: sun_p(ell),
        n: g.vertex_count(),
        m: g.edge_count(),
        packing_number: None,
        deletions_checked: 0,
        shortest_witness: None,
        ok: true,
    };
    if ell < 30 {
        let (num, _) = oracle_max_packing(&g.full(), ell, budget)?;
        report.packing_number = Some(num);
        report.ok = num == 1;
        return Ok(report);
    }
    if ell / 30 == 1 {
        for e in g.edges() {
            let x = EdgeSubset::from_ids(g.edge_count(), [e]);
            let c = sun_witness_after_deletion(ell, &x)?;
            let valid = c.is_valid_in(&g) && c.len() >= ell && !c.edges().contains(&e);
            report.ok &= valid;
            report.deletions_checked += 1;
            report.shortest_witness = Some(report.shortest_witness.map_or(c.len(), |s| s.min(c.len())));
        }
    }
    Ok(report)
}
