//! Deterministic graph generators used by the tests, benchmarks and CLI.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, VertexId};

pub type GenRng = ChaCha8Rng;

pub fn rng(seed: u64) -> GenRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn cycle_graph(n: usize) -> MultiGraph {
    MultiGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
}

pub fn path_graph(n: usize) -> MultiGraph {
    MultiGraph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
}

pub fn complete_graph(n: usize) -> MultiGraph {
    let mut g = MultiGraph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            g.add_edge(VertexId(i), VertexId(j));
        }
    }
    g
}

pub fn petersen() -> MultiGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    MultiGraph::from_edges(10, edges).expect("valid petersen")
}

/// Vertices 0 and 1 joined by internally disjoint paths of the given lengths.
pub fn theta(lengths: &[usize]) -> MultiGraph {
    let mut g = MultiGraph::new(2);
    for &len in lengths {
        assert!(len >= 1);
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

/// Replaces every edge by a path of `len` edges.
pub fn subdivide(g: &MultiGraph, len: usize) -> MultiGraph {
    assert!(len >= 1);
    let mut h = MultiGraph::new(g.vertex_count());
    for e in g.edges() {
        let (a, b) = g.endpoints(e);
        let mut prev = a;
        for _ in 0..len - 1 {
            let v = h.add_vertex();
            h.add_edge(prev, v);
            prev = v;
        }
        h.add_edge(prev, b);
    }
    h
}

/// Adds a parallel copy of every edge.
pub fn double_edges(g: &MultiGraph) -> MultiGraph {
    let mut h = MultiGraph::new(g.vertex_count());
    for e in g.edges() {
        let (a, b) = g.endpoints(e);
        h.add_edge(a, b);
        h.add_edge(a, b);
    }
    h
}

/// A connected loopless graph with `n` vertices and `m` edges: a random
/// spanning tree plus random extra edges, shuffled into random edge order.
pub fn random_connected(rng: &mut GenRng, n: usize, m: usize, allow_parallel: bool) -> Result<MultiGraph> {
    if n == 0 || m + 1 < n {
        return Err(Error::invalid(format!("cannot build a connected graph with n={n}, m={m}")));
    }
    let max_simple = n * (n - 1) / 2;
    if !allow_parallel && m > max_simple {
        return Err(Error::invalid(format!("a simple graph on {n} vertices has at most {max_simple} edges")));
    }
    if n == 1 && m > 0 {
        return Err(Error::invalid("a single vertex admits only loops"));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(m);
    let mut present = std::collections::HashSet::new();
    for i in 1..n {
        let j = order[rng.random_range(0..i)];
        let (a, b) = (order[i].min(j), order[i].max(j));
        pairs.push((a, b));
        present.insert((a, b));
    }
    while pairs.len() < m {
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        if a == b {
            continue;
        }
        let key = (a.min(b), a.max(b));
        if !allow_parallel && present.contains(&key) {
            continue;
        }
        present.insert(key);
        pairs.push(key);
    }
    pairs.shuffle(rng);
    MultiGraph::from_edges(n, pairs)
}

/// A loopless multigraph with minimum degree at least 3 and exactly
/// `max(m, ceil(3n/2))`-ish edges: degree repair first, then random edges.
pub fn random_min_degree3(rng: &mut GenRng, n: usize, m: usize) -> Result<MultiGraph> {
    if n < 2 {
        return Err(Error::invalid("need at least two vertices"));
    }
    let mut g = MultiGraph::new(n);
    let mut deg = vec![0usize; n];
    loop {
        let low: Vec<usize> = (0..n).filter(|&v| deg[v] < 3).collect();
        if low.is_empty() {
            break;
        }
        let a = low[rng.random_range(0..low.len())];
        let mut b = rng.random_range(0..n);
        while b == a {
            b = rng.random_range(0..n);
        }
        g.add_edge(VertexId(a), VertexId(b));
        deg[a] += 1;
        deg[b] += 1;
    }
    while g.edge_count() < m {
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        if a != b {
            g.add_edge(VertexId(a), VertexId(b));
        }
    }
    Ok(g)
}
