//! Instance generators shared by the integration tests.
#![allow(dead_code)]

use longcycles::cycles::{find_long_cycle, DetectorBudget, LongCycleQuery};
use longcycles::gen::{random_connected, random_min_degree3, rng, subdivide, theta, GenRng};
use longcycles::graph::{blocks, EdgeSubset, MultiGraph, VertexId};
use longcycles::pathtools::long_cycles_at_least;
use rand::Rng;

pub fn budget() -> DetectorBudget {
    DetectorBudget::default()
}

/// Connected multigraph with `n` in `[2, n_max]` and `m` in `[n, m_max]`.
pub fn random_graph(seed: u64, n_max: usize, m_max: usize) -> MultiGraph {
    let mut r = rng(seed);
    let n = r.random_range(2..=n_max);
    let m = r.random_range(n..=m_max.max(n));
    random_connected(&mut r, n, m, true).expect("feasible sizes")
}

/// Like [`random_graph`] but with a few loops added.
pub fn random_graph_with_loops(seed: u64, n_max: usize, m_max: usize) -> MultiGraph {
    let mut g = random_graph(seed, n_max, m_max);
    let mut r = rng(seed ^ 0x5eed);
    for _ in 0..r.random_range(0..=2usize) {
        let v = VertexId(r.random_range(0..g.vertex_count()));
        g.add_edge(v, v);
    }
    g
}

pub fn add_chord(g: &mut MultiGraph, a: VertexId, b: VertexId, len: usize) {
    let mut at = a;
    for _ in 1..len {
        let v = g.add_vertex();
        g.add_edge(at, v);
        at = v;
    }
    g.add_edge(at, b);
}

/// Adds up to `count` chords of length 1 or 2 between vertices among the
/// first `base` whose distance keeps the new cycle short.
fn local_chords(r: &mut GenRng, g: &mut MultiGraph, base: usize, ell: usize, count: usize) {
    for _ in 0..count {
        let a = VertexId(r.random_range(0..base));
        let dist = g.full().distances_from(a);
        let len = r.random_range(1..=2usize);
        let near: Vec<usize> = (0..base).filter(|&v| matches!(dist[v], Some(d) if d >= 1 && d + len < ell)).collect();
        if near.is_empty() {
            continue;
        }
        let b = VertexId(near[r.random_range(0..near.len())]);
        add_chord(g, a, b, len);
    }
}

/// A desk-scale graph (at most 24 edges) whose long cycles all have length
/// at least `2 ell`, with `ell = 4`: a subdivided theta or K4 plus short
/// local chords.
pub fn desk_frame_instance(seed: u64) -> Option<(MultiGraph, usize)> {
    let ell = 4;
    let mut r = rng(seed);
    let mut g = if r.random_bool(0.5) {
        let lens: Vec<usize> = (0..3).map(|_| r.random_range(4..=6usize)).collect();
        theta(&lens)
    } else {
        subdivide(&longcycles::gen::complete_graph(4), 3)
    };
    let base = g.vertex_count();
    let chords = r.random_range(1..=6usize);
    local_chords(&mut r, &mut g, base, ell, chords);
    if g.edge_count() > 24 || !long_cycles_at_least(&g, ell, 2, &budget()).ok()? {
        return None;
    }
    Some((g, ell))
}

/// A larger graph whose long cycles all exceed `10 ell`: a subdivided random
/// multigraph with local short chords and a few long ones, stripped of every
/// long cycle of length at most `10 ell` and of edges on no long cycle. The
/// largest remaining block, with `ell` in 4..=5.
pub fn stripped_instance(r: &mut GenRng) -> Option<(MultiGraph, usize)> {
    let ell = r.random_range(4..=5usize);
    let n = r.random_range(3..=5usize);
    let m = r.random_range(n + 1..=2 * n);
    let core = random_min_degree3(r, n, m).ok()?;
    let mut g = subdivide(&core, 10 * ell / 2 + 1);
    let base = g.vertex_count();
    let chords = r.random_range(3..=12usize);
    local_chords(r, &mut g, base, ell, chords);
    for _ in 0..r.random_range(0..=2usize) {
        let a = VertexId(r.random_range(0..base));
        let b = VertexId(r.random_range(0..base));
        let len = r.random_range(ell..=3 * ell);
        add_chord(&mut g, a, b, len);
    }
    let b = budget();
    let mut keep = EdgeSubset::full(g.edge_count());
    while let Some(c) = find_long_cycle(&g.view(keep.clone()), &LongCycleQuery::length_at_most(ell, 10 * ell), &b).ok()? {
        keep.difference_with(&c.edge_set(g.edge_count()));
    }
    let view = g.view(keep);
    let mut on_long = EdgeSubset::empty(g.edge_count());
    for e in view.edge_ids() {
        if find_long_cycle(&view, &LongCycleQuery::through_edge(ell, e), &b).ok()?.is_some() {
            on_long.insert(e);
        }
    }
    let block = blocks(&g.view(on_long)).into_iter().max_by_key(|s| s.len())?;
    if block.is_empty() {
        return None;
    }
    let mut h = MultiGraph::new(g.vertex_count());
    for e in block.iter() {
        let (a, b) = g.endpoints(e);
        h.add_edge(a, b);
    }
    Some((h, ell))
}
