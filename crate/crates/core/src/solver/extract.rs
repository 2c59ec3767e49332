//! Turning a long cycle that survives the hitting-set candidate into `k`
//! edge-disjoint long cycles.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Cycle, EdgeId, EdgeSubset, MultiGraph, Subgraph, VertexId};
use crate::separation::{edge_disjoint_paths, CutResult};

/// A thick ear closure or a component of a separated vertex-hub closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub edges: EdgeSubset,
    /// Gates and free-part ends lying in the piece.
    pub boundary: Vec<VertexId>,
}

/// Maximal runs of consecutive cycle edges in one piece: (piece, first edge
/// index, length), in cycle order starting at a run boundary.
fn runs(c: &Cycle, piece_of: &[Option<usize>]) -> Result<Vec<(usize, usize, usize)>> {
    let n = c.len();
    let label = |i: usize| piece_of[c.edges()[i % n].0];
    for i in 0..n {
        if label(i).is_none() {
            return Err(Error::claim("long cycles live in the pieces", format!("edge {} lies in no piece", c.edges()[i])));
        }
    }
    let Some(start) = (0..n).find(|&i| label(i) != label(i + n - 1)) else {
        return Ok(vec![(label(0).unwrap(), 0, n)]);
    };
    let mut out = Vec::new();
    let mut i = start;
    while i < start + n {
        let p = label(i).unwrap();
        let mut j = i;
        while j < start + n && label(j) == Some(p) {
            j += 1;
        }
        out.push((p, i % n, j - i));
        i = j;
    }
    Ok(out)
}

fn rotate(c: &Cycle, from: usize) -> Vec<EdgeId> {
    let n = c.len();
    (0..n).map(|i| c.edges()[(from + i) % n]).collect()
}

/// Shortest C-paths inside `piece` from `x`: paths avoiding cycle edges whose
/// interior avoids the cycle. Returns (target, edges) in BFS order.
fn c_paths_from(
    g: &MultiGraph,
    piece: &Subgraph<'_>,
    on_cycle: &[bool],
    cyc_edges: &EdgeSubset,
    x: VertexId,
) -> Vec<(VertexId, Vec<EdgeId>)> {
    let mut parent: Vec<Option<EdgeId>> = vec![None; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    seen[x.0] = true;
    let mut queue = VecDeque::from([x]);
    let mut out = Vec::new();
    while let Some(v) = queue.pop_front() {
        for (e, w) in piece.incident(v) {
            if cyc_edges.contains(e) || seen[w.0] {
                continue;
            }
            seen[w.0] = true;
            parent[w.0] = Some(e);
            if on_cycle[w.0] {
                let mut path = Vec::new();
                let mut y = w;
                while y != x {
                    let pe = parent[y.0].unwrap();
                    path.push(pe);
                    y = g.other(pe, y);
                }
                path.reverse();
                out.push((w, path));
            } else {
                queue.push_back(w);
            }
        }
    }
    out
}

/// Rewires `c` along a C-path inside a piece it visits twice, giving a long
/// cycle with fewer runs.
fn repair_once(g: &MultiGraph, c: &Cycle, pieces: &[Piece], piece_of: &[Option<usize>], target: usize, ell: usize) -> Result<Cycle> {
    let s = runs(c, piece_of)?.len();
    let verts = c.vertices(g);
    let n = c.len();
    let mut on_cycle = vec![false; g.vertex_count()];
    let mut index = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in verts.iter().enumerate() {
        on_cycle[v.0] = true;
        index[v.0] = i;
    }
    let cyc_edges = c.edge_set(g.edge_count());
    let piece = g.view(pieces[target].edges.clone());
    let my_runs: Vec<(usize, usize)> = runs(c, piece_of)?.into_iter().filter(|r| r.0 == target).map(|r| (r.1, r.2)).collect();
    let run_of = |v: VertexId| -> Option<usize> {
        let i = index[v.0];
        my_runs.iter().position(|&(a, len)| (0..=len).any(|d| (a + d) % n == i))
    };
    let mut candidates: Vec<(bool, usize, Vec<EdgeId>, VertexId, VertexId)> = Vec::new();
    let mut sources: Vec<VertexId> = verts.iter().copied().filter(|&v| piece.contains_vertex(v)).collect();
    sources.sort_by_key(|v| index[v.0]);
    for x in sources {
        for (y, q) in c_paths_from(g, &piece, &on_cycle, &cyc_edges, x) {
            if index[y.0] <= index[x.0] {
                continue;
            }
            let other_run = matches!((run_of(x), run_of(y)), (Some(a), Some(b)) if a != b);
            candidates.push((!other_run, q.len(), q, x, y));
        }
    }
    candidates.sort_by_key(|c| (c.0, c.1));
    for (_, _, q, x, y) in candidates {
        let (i, j) = (index[x.0], index[y.0]);
        let rot = rotate(c, i);
        let (arc1, arc2) = rot.split_at(j - i);
        let mut d1: Vec<EdgeId> = arc1.to_vec();
        d1.extend(q.iter().rev());
        let mut d2 = q.clone();
        d2.extend_from_slice(arc2);
        for d in [d1, d2] {
            let Ok(d) = Cycle::new(g, d) else { continue };
            if d.len() >= ell && runs(&d, piece_of)?.len() < s {
                return Ok(d);
            }
        }
    }
    Err(Error::claim("each piece is traversed once", format!("no rewiring of a cycle with {s} segments inside piece {target}")))
}

/// A cycle inside an edge set of minimum degree 2, found by DFS from the
/// smaller end of the lowest edge.
fn find_cycle_in(g: &MultiGraph, set: &EdgeSubset) -> Option<Cycle> {
    let first = set.first()?;
    let root = g.endpoints(first).0;
    let view = g.view(set.clone());
    let n = g.vertex_count();
    let mut state = vec![0u8; n];
    let mut parent: Vec<Option<EdgeId>> = vec![None; n];
    let mut stack: Vec<(VertexId, Vec<(EdgeId, VertexId)>)> = Vec::new();
    let nbrs = |v: VertexId| {
        let mut l: Vec<(EdgeId, VertexId)> = view.incident(v).collect();
        l.sort();
        l.reverse();
        l
    };
    state[root.0] = 1;
    stack.push((root, nbrs(root)));
    while let Some((v, list)) = stack.last_mut() {
        let v = *v;
        let Some((e, w)) = list.pop() else {
            state[v.0] = 2;
            stack.pop();
            continue;
        };
        if Some(e) == parent[v.0] {
            continue;
        }
        if state[w.0] == 1 {
            let mut edges = vec![e];
            let mut y = v;
            while y != w {
                let pe = parent[y.0].unwrap();
                edges.push(pe);
                y = g.other(pe, y);
            }
            return Cycle::new(g, edges).ok();
        }
        if state[w.0] == 0 {
            state[w.0] = 1;
            parent[w.0] = Some(e);
            let l = nbrs(w);
            stack.push((w, l));
        }
    }
    None
}

/// `k` edge-disjoint long cycles from a long cycle `c` of `G − X`.
pub fn extract_packing(g: &MultiGraph, pieces: &[Piece], c: Cycle, k: usize, ell: usize) -> Result<Vec<Cycle>> {
    let m = g.edge_count();
    let mut piece_of: Vec<Option<usize>> = vec![None; m];
    for (i, p) in pieces.iter().enumerate() {
        for e in p.edges.iter() {
            crate::ensure_claim!(
                piece_of[e.0].is_none(),
                "pieces are edge-disjoint",
                "edge {e} in pieces {} and {i}",
                piece_of[e.0].unwrap()
            );
            piece_of[e.0] = Some(i);
        }
    }
    let mut c = c;
    loop {
        let rs = runs(&c, &piece_of)?;
        crate::ensure_claim!(rs.len() >= 2, "no long cycle inside one piece", "cycle of length {} inside piece {}", c.len(), rs[0].0);
        let mut count = vec![0usize; pieces.len()];
        for r in &rs {
            count[r.0] += 1;
        }
        match count.iter().position(|&x| x >= 2) {
            Some(target) => c = repair_once(g, &c, pieces, &piece_of, target, ell)?,
            None => break,
        }
    }
    let rs = runs(&c, &piece_of)?;
    let verts = c.vertices(g);
    let n = c.len();
    let mut walks: Vec<Vec<EdgeId>> = vec![Vec::new(); k];
    for &(p, start, len) in &rs {
        let (a, b) = (verts[start], verts[(start + len) % n]);
        for gate in [a, b] {
            crate::ensure_claim!(
                pieces[p].boundary.contains(&gate),
                "segments end at boundary vertices",
                "{gate} is not on the boundary of piece {p}"
            );
        }
        match edge_disjoint_paths(&g.view(pieces[p].edges.clone()), a, b, k)? {
            CutResult::Paths(ps) => {
                for (w, path) in walks.iter_mut().zip(ps.paths) {
                    w.extend_from_slice(path.edges());
                }
            }
            CutResult::Cut(x) => {
                return Err(Error::claim(
                    "boundary vertices are k-linked in their piece",
                    format!("{a} and {b} separated by {} edges in piece {p}", x.len()),
                ));
            }
        }
    }
    let mut used = EdgeSubset::empty(m);
    let mut out = Vec::with_capacity(k);
    for (r, w) in walks.iter().enumerate() {
        let set = EdgeSubset::from_ids(m, w.iter().copied());
        let cyc = find_cycle_in(g, &set).ok_or_else(|| Error::claim("closed walks contain cycles", format!("walk {r} is acyclic")))?;
        crate::ensure_claim!(cyc.len() >= ell, "cycles through several pieces are long", "cycle of length {} from walk {r}", cyc.len());
        let cs = cyc.edge_set(m);
        crate::ensure_claim!(cs.is_disjoint(&used), "extracted cycles are edge-disjoint", "walk {r} overlaps an earlier cycle");
        used.union_with(&cs);
        out.push(cyc);
    }
    Ok(out)
}
