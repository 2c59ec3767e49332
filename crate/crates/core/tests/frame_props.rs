mod common;

use common::{budget, desk_frame_instance};
use longcycles::cycles::{enumerate_cycles, shortest_cycle};
use longcycles::frame::{compute_bridges, enumerate_fpaths, initial_frame, maximize_frame, shadow_of_pair, Frame};
use longcycles::graph::{EdgeSubset, MultiGraph};
use longcycles::hubs::{classify_ears, compute_hubs, u_ears, HubKind};
use proptest::prelude::*;

fn instance(seed: u64) -> (MultiGraph, usize) {
    (0..200).find_map(|i| desk_frame_instance(seed.wrapping_add(i))).expect("some seed yields an instance")
}

fn frame_of(g: &MultiGraph, ell: usize) -> Frame {
    let f0 = initial_frame(&g.full(), ell, &budget()).unwrap();
    maximize_frame(&g.full(), f0, true, &budget()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn maximal_frames_are_valid_fixpoints(seed in any::<u64>()) {
        let (g, ell) = instance(seed);
        let f0 = initial_frame(&g.full(), ell, &budget()).unwrap();
        let f = maximize_frame(&g.full(), f0.clone(), true, &budget()).unwrap();
        prop_assert!(f.ds() >= f0.ds());
        prop_assert!(f0.edges().is_subset(f.edges()));
        let fv = f.view(&g);
        prop_assert!(fv.min_degree().unwrap() >= 2);
        prop_assert!(shortest_cycle(&fv).unwrap().len() >= ell);
        let ds: usize = fv.vertices().iter().map(|&v| fv.degree(v)).filter(|&d| d >= 3).sum();
        prop_assert_eq!(ds, f.ds());
        for q in enumerate_fpaths(&g.full(), &f, &budget()).unwrap() {
            let d = fv.distances_from(q.start())[q.end().0];
            prop_assert!(matches!(d, Some(d) if d + q.len() < ell), "addable F-path of length {}", q.len());
        }
    }

    #[test]
    fn bridge_shadows_are_unions_of_fpath_shadows(seed in any::<u64>()) {
        let (g, ell) = instance(seed);
        let f = frame_of(&g, ell);
        let bridges = compute_bridges(&g.full(), &f, true).unwrap();
        let paths = enumerate_fpaths(&g.full(), &f, &budget()).unwrap();
        let mut covered = f.edges().clone();
        for b in &bridges {
            prop_assert!(covered.is_disjoint(&b.edges));
            covered.union_with(&b.edges);
            let mut union = EdgeSubset::empty(g.edge_count());
            for q in paths.iter().filter(|q| q.edges().iter().all(|&e| b.edges.contains(e))) {
                let s = shadow_of_pair(&g, &f, q.start(), q.end(), true).unwrap();
                union.union_with(&s.edge_set(g.edge_count()));
            }
            prop_assert_eq!(&union, &b.shadow);
        }
        prop_assert_eq!(covered.len(), g.edge_count());
    }

    #[test]
    fn closures_hold_no_long_cycle_and_partition_the_graph(seed in any::<u64>()) {
        let (g, ell) = instance(seed);
        let f = frame_of(&g, ell);
        let bridges = compute_bridges(&g.full(), &f, true).unwrap();
        let hubs = compute_hubs(&g, &f, &bridges).unwrap();
        let all = enumerate_cycles(&g.full(), 1, None, &budget()).unwrap();
        for h in &hubs {
            prop_assert!(enumerate_cycles(&g.view(h.closure.clone()), ell, None, &budget()).unwrap().is_empty());
            for c in &all {
                let inside = c.edges().iter().filter(|&&e| h.closure.contains(e)).count();
                if inside > 0 && inside < c.len() {
                    prop_assert!(c.len() >= ell, "short cycle leaves a closure");
                }
            }
        }
        if f.branch_vertices().is_empty() {
            return Ok(());
        }
        let vertex_hubs: Vec<_> = hubs.iter().filter(|h| h.kind == HubKind::VertexHub).collect();
        let gates: usize = vertex_hubs.iter().map(|h| h.gates.len()).sum();
        prop_assert!(gates <= 2 * f.ds());
        let ears = u_ears(&g, &f).unwrap();
        let closures = classify_ears(&g, &f, &hubs, &ears).unwrap();
        let mut covered = EdgeSubset::empty(g.edge_count());
        let parts = vertex_hubs.iter().map(|h| &h.closure).chain(closures.iter().map(|c| &c.closure));
        for part in parts {
            prop_assert!(covered.is_disjoint(part));
            covered.union_with(part);
        }
        prop_assert_eq!(covered.len(), g.edge_count());
        for c in &closures {
            prop_assert!(enumerate_cycles(&g.view(c.closure.clone()), ell, None, &budget()).unwrap().is_empty());
        }
    }
}
