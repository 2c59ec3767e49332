use super::{log2k, shortest_cycle};
use crate::error::{Error, Result};
use crate::graph::{suppress_degree2, Cycle, MultiGraph, Subgraph};

fn dense_threshold(k: usize) -> f64 {
    42.0 * k as f64 * log2k(k)
}

/// `k` edge-disjoint cycles of a multigraph with minimum degree 3: take a
/// shortest cycle, delete its edges, prune and suppress down to minimum
/// degree 3 again, recurse, and expand the recursive cycles back.
///
/// With at least `42 k log2 k` edges the recursion cannot run dry, so a
/// failure there is reported as a violated assertion. Below that threshold
/// the same procedure runs best-effort and a shortfall is an input error.
pub fn pack_cycles_dense(view: &Subgraph<'_>, k: usize) -> Result<Vec<Cycle>> {
    if k == 0 {
        return Ok(Vec::new());
    }
    match view.min_degree() {
        None => return Err(Error::invalid("graph has no edges")),
        Some(d) if d < 3 => return Err(Error::invalid(format!("minimum degree {d} is below 3"))),
        _ => {}
    }
    let guaranteed = k == 1 || view.edge_count() as f64 >= dense_threshold(k);
    let cycles = pack_rec(view, k, guaranteed)?;
    let g = view.host();
    let mut used = vec![false; g.edge_count()];
    for c in &cycles {
        crate::ensure_claim!(c.is_valid_in(g), "dense packing", "expanded walk {:?} is not a cycle", c.edges());
        for e in c.edges() {
            crate::ensure_claim!(!std::mem::replace(&mut used[e.0], true), "dense packing", "cycles share {e}");
        }
    }
    Ok(cycles)
}

fn pack_rec(view: &Subgraph<'_>, k: usize, guaranteed: bool) -> Result<Vec<Cycle>> {
    let Some(c) = shortest_cycle(view) else {
        return Err(if guaranteed {
            Error::claim("dense packing", format!("no cycle left with {} cycles still to find", k))
        } else {
            Error::invalid(format!("graph is too sparse: {} more cycles needed", k))
        });
    };
    if k == 1 {
        return Ok(vec![c]);
    }
    let rest = view.without(&c.edge_set(view.host().edge_count()));
    let (reduced, map): (MultiGraph, _) = suppress_degree2(&rest);
    if guaranteed {
        crate::ensure_claim!(
            reduced.edge_count() as f64 >= dense_threshold(k - 1),
            "dense packing",
            "reduced graph has {} edges, fewer than the bound for k={}",
            reduced.edge_count(),
            k - 1
        );
    }
    let sub = pack_rec(&reduced.full(), k - 1, guaranteed)?;
    let mut out = vec![c];
    out.extend(sub.iter().map(|d| map.expand(d)));
    Ok(out)
}
