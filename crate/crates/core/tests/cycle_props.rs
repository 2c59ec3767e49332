mod common;

use common::{budget, random_graph_with_loops};
use longcycles::cycles::{enumerate_cycles, find_long_cycle, log2k, oracle_max_packing, pack_cycles_dense, shortest_cycle, LongCycleQuery};
use longcycles::gen::{random_min_degree3, rng};
use longcycles::graph::{Cycle, EdgeId, EdgeSubset};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn detector_agrees_with_enumeration(seed in any::<u64>(), ell in 1usize..8, slack in 0usize..4) {
        let g = random_graph_with_loops(seed, 10, 18);
        let all = enumerate_cycles(&g.full(), 1, None, &budget()).unwrap();
        let lens: Vec<usize> = all.iter().map(Cycle::len).collect();
        let check = |c: &Option<Cycle>| c.as_ref().is_none_or(|c| Cycle::new(&g, c.edges().to_vec()).is_ok());

        let any = find_long_cycle(&g.full(), &LongCycleQuery::any_long(ell), &budget()).unwrap();
        prop_assert!(check(&any));
        prop_assert_eq!(any.is_some(), lens.iter().any(|&l| l >= ell));
        prop_assert!(any.is_none_or(|c| c.len() >= ell));

        let shortest = find_long_cycle(&g.full(), &LongCycleQuery::shortest_long(ell), &budget()).unwrap();
        prop_assert!(check(&shortest));
        prop_assert_eq!(shortest.map(|c| c.len()), lens.iter().copied().filter(|&l| l >= ell).min());

        let bound = ell + slack;
        let bounded = find_long_cycle(&g.full(), &LongCycleQuery::length_at_most(ell, bound), &budget()).unwrap();
        prop_assert!(check(&bounded));
        prop_assert_eq!(bounded.is_some(), lens.iter().any(|&l| l >= ell && l <= bound));
        prop_assert!(bounded.is_none_or(|c| c.len() >= ell && c.len() <= bound));

        for e in g.edges() {
            let through = find_long_cycle(&g.full(), &LongCycleQuery::through_edge(ell, e), &budget()).unwrap();
            prop_assert!(check(&through));
            prop_assert!(through.as_ref().is_none_or(|c| c.len() >= ell && c.edges().contains(&e)));
            let expected = all.iter().any(|c| c.len() >= ell && c.edges().contains(&e));
            prop_assert_eq!(through.is_some(), expected);
        }
    }

    #[test]
    fn detector_matches_packing_oracle(seed in any::<u64>(), ell in 2usize..7) {
        let g = random_graph_with_loops(seed, 10, 16);
        let found = find_long_cycle(&g.full(), &LongCycleQuery::any_long(ell), &budget()).unwrap();
        let (best, _) = oracle_max_packing(&g.full(), ell, &budget()).unwrap();
        prop_assert_eq!(found.is_some(), best >= 1);
    }

    #[test]
    fn girth_is_minimum(seed in any::<u64>()) {
        let g = random_graph_with_loops(seed, 10, 18);
        let all = enumerate_cycles(&g.full(), 1, None, &budget()).unwrap();
        let c = shortest_cycle(&g.full());
        prop_assert_eq!(c.as_ref().map(Cycle::len), all.iter().map(Cycle::len).min());
        if let Some(c) = c {
            prop_assert!(Cycle::new(&g, c.edges().to_vec()).is_ok());
        }
    }

    #[test]
    fn girth_bound_on_dense_multigraphs(seed in any::<u64>(), n in 4usize..200) {
        let g = random_min_degree3(&mut rng(seed), n, 0).unwrap();
        let c = shortest_cycle(&g.full()).unwrap();
        prop_assert!(c.len() as f64 <= (2.0 * (n as f64).log2()).max(1.0));
    }

    #[test]
    fn dense_packing_is_disjoint(seed in any::<u64>(), k in 2usize..5, n in 6usize..50) {
        let need = (42.0 * k as f64 * log2k(k)).ceil() as usize;
        let g = random_min_degree3(&mut rng(seed), n, need).unwrap();
        let cycles = pack_cycles_dense(&g.full(), k).unwrap();
        prop_assert_eq!(cycles.len(), k);
        let mut used = EdgeSubset::empty(g.edge_count());
        for c in &cycles {
            prop_assert!(Cycle::new(&g, c.edges().to_vec()).is_ok());
            for &e in c.edges() {
                prop_assert!(!used.contains(e));
                used.insert(e);
            }
        }
    }
}

#[test]
fn loops_and_parallel_pairs_are_short_cycles() {
    let g = longcycles::graph::parse_graph("2 3\n0 0\n0 1\n0 1\n").unwrap();
    assert_eq!(shortest_cycle(&g.full()).unwrap().edges(), &[EdgeId(0)]);
    let c = find_long_cycle(&g.full(), &LongCycleQuery::any_long(2), &budget()).unwrap().unwrap();
    assert_eq!(c.len(), 2);
}
