use longcycles::graph::{Cycle, EdgeId, EdgeSubset};
use longcycles::suns::{make_sun, sun_p, sun_witness_after_deletion};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn witnesses_avoid_x_and_match_the_count(ell in 30usize..160, picks in proptest::collection::vec(any::<u32>(), 0..6)) {
        let g = make_sun(ell).unwrap();
        let p = sun_p(ell);
        let m = g.edge_count();
        prop_assert_eq!(m, p * (p - 1) / 2 + 2 * p);
        let ids: Vec<EdgeId> = picks.iter().take(ell / 30).map(|&x| EdgeId(x as usize % m)).collect();
        let x = EdgeSubset::from_ids(m, ids);
        let c = sun_witness_after_deletion(ell, &x).unwrap();
        let c = Cycle::new(&g, c.edges().to_vec()).unwrap();
        prop_assert!(c.edges().iter().all(|&e| !x.contains(e)));
        prop_assert!(c.len() >= ell);
        // endpoints of X, then both rim neighbours of every deleted clique vertex
        let mut gone = vec![false; 2 * p];
        for e in x.iter() {
            let (a, b) = g.endpoints(e);
            gone[a.0] = true;
            gone[b.0] = true;
        }
        for i in 0..p {
            if gone[i] {
                for &e in g.incident(longcycles::graph::VertexId(i)) {
                    let w = g.other(e, longcycles::graph::VertexId(i));
                    if w.0 >= p {
                        gone[w.0] = true;
                    }
                }
            }
        }
        let deleted = gone.iter().filter(|&&d| d).count();
        prop_assert_eq!(c.len(), 2 * p - deleted);
    }
}

#[test]
fn oversized_deletions_are_rejected() {
    let m = make_sun(59).unwrap().edge_count();
    assert!(sun_witness_after_deletion(59, &EdgeSubset::from_ids(m, [EdgeId(0), EdgeId(1)])).is_err());
}
