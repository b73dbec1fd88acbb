mod common;

use common::graph_and_layout;
use cwplanar::sample::random_layout;
use cwplanar::solvers::{
    brute_ds, brute_is, brute_vc, dp_ds, dp_ds_with_budget, dp_is, heuristic_layout, state_ceiling,
};
use cwplanar::{cut_profile, exact_cutwidth, ErrorKind, Graph, LinearLayout};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Independent set and dominating set optima by plain subset enumeration.
fn by_enumeration(g: &Graph) -> (usize, usize) {
    let n = g.vertex_count();
    let nb = g.neighbor_masks();
    let mut is = 0;
    let mut ds = n;
    for s in 0u32..(1 << n) {
        let k = s.count_ones() as usize;
        if (0..n).all(|v| s & (1 << v) == 0 || nb[v] as u32 & s == 0) {
            is = is.max(k);
        }
        if (0..n).all(|v| s & (1 << v) != 0 || nb[v] as u32 & s != 0) {
            ds = ds.min(k);
        }
    }
    (is, ds)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn oracles_agree((g, l) in graph_and_layout(12)) {
        let (is, ds) = by_enumeration(&g);
        prop_assert_eq!(brute_is(&g).unwrap(), is);
        prop_assert_eq!(brute_ds(&g).unwrap(), ds);
        prop_assert_eq!(brute_vc(&g).unwrap(), g.vertex_count() - is);
        let ri = dp_is(&g, &l).unwrap();
        let rd = dp_ds(&g, &l).unwrap();
        prop_assert_eq!(ri.optimum, is);
        prop_assert_eq!(rd.optimum, ds);
        prop_assert!(ri.max_live_states as u64 <= state_ceiling(2, ri.width_used));
        prop_assert!(rd.max_live_states as u64 <= state_ceiling(3, rd.width_used));
    }

    #[test]
    fn dp_does_not_depend_on_the_layout((g, l) in graph_and_layout(14)) {
        let other = heuristic_layout(&g);
        prop_assert_eq!(dp_is(&g, &l).unwrap().optimum, dp_is(&g, &other).unwrap().optimum);
        prop_assert_eq!(dp_ds(&g, &l).unwrap().optimum, dp_ds(&g, &other).unwrap().optimum);
    }

    #[test]
    fn adding_an_edge_never_raises_optima((g, l) in graph_and_layout(12), a in 0usize..12, b in 0usize..12) {
        let n = g.vertex_count();
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b && !g.has_edge(a, b));
        let mut bld = g.to_builder();
        bld.add_edge(a, b).unwrap();
        let h = bld.build();
        prop_assert!(dp_is(&h, &l).unwrap().optimum <= dp_is(&g, &l).unwrap().optimum);
        prop_assert!(dp_ds(&h, &l).unwrap().optimum <= dp_ds(&g, &l).unwrap().optimum);
    }

    #[test]
    fn heuristic_width_is_at_least_the_cutwidth((g, _l) in graph_and_layout(10)) {
        let h = heuristic_layout(&g);
        prop_assert!(cut_profile(&g, &h).unwrap().max_width >= exact_cutwidth(&g).unwrap().0);
    }
}

#[test]
fn named_optima() {
    let c5 = Graph::cycle(5);
    assert_eq!(brute_is(&c5).unwrap(), 2);
    assert_eq!(brute_ds(&c5).unwrap(), 2);
    for n in 2..8 {
        assert_eq!(brute_vc(&Graph::complete(n)).unwrap(), n - 1);
        assert_eq!(brute_is(&Graph::complete(n)).unwrap(), 1);
    }
    assert_eq!(dp_is(&Graph::path(4), &LinearLayout::identity(4)).unwrap().optimum, 2);
    assert_eq!(dp_ds(&Graph::star(5), &LinearLayout::identity(6)).unwrap().optimum, 1);
    assert_eq!(dp_ds(&Graph::empty(3), &LinearLayout::identity(3)).unwrap().optimum, 3);
}

#[test]
fn wide_layouts_hit_the_memory_budget() {
    let g = Graph::complete(20);
    let err = dp_ds_with_budget(&g, &LinearLayout::identity(20), 1 << 20).unwrap_err();
    assert_eq!(err.kind(), ErrorKind::Resource);
}

#[test]
fn fourteen_vertex_corpus() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let g = cwplanar::sample::random_graph(&mut rng, 14);
        let l = random_layout(&mut rng, g.vertex_count());
        assert_eq!(dp_is(&g, &l).unwrap().optimum, brute_is(&g).unwrap());
        assert_eq!(dp_ds(&g, &l).unwrap().optimum, brute_ds(&g).unwrap());
    }
}
