mod common;

use common::graph_and_layout;
use cwplanar::io::{graph_from_json, graph_to_json, parse_dot, parse_graph, parse_layout, to_dot, write_graph, write_layout};
use cwplanar::{cut_profile, exact_cutwidth, layout_to_path_decomposition, Graph, LinearLayout};
use proptest::prelude::*;

/// Cut widths computed straight from the definition.
fn widths_by_definition(g: &Graph, l: &LinearLayout) -> Vec<usize> {
    let n = g.vertex_count();
    (1..n)
        .map(|i| g.edges().iter().filter(|e| (l.position(e.0) < i) != (l.position(e.1) < i)).count())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cut_profile_matches_definition((g, l) in graph_and_layout(12)) {
        let p = cut_profile(&g, &l).unwrap();
        let want = widths_by_definition(&g, &l);
        prop_assert_eq!(p.max_width, want.iter().copied().max().unwrap_or(0));
        prop_assert_eq!(p.widths, want);
    }

    #[test]
    fn exact_cutwidth_is_a_lower_bound((g, l) in graph_and_layout(9)) {
        let (cw, best) = exact_cutwidth(&g).unwrap();
        prop_assert!(cw <= cut_profile(&g, &l).unwrap().max_width);
        prop_assert_eq!(cut_profile(&g, &best).unwrap().max_width, cw);
    }

    #[test]
    fn exact_cutwidth_ignores_vertex_names((g, l) in graph_and_layout(9)) {
        let perm = l.order().to_vec();
        let (a, _) = exact_cutwidth(&g).unwrap();
        let (b, _) = exact_cutwidth(&g.relabel(&perm)).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn path_decompositions_are_valid((g, l) in graph_and_layout(14)) {
        let pd = layout_to_path_decomposition(&g, &l).unwrap();
        pd.validate(&g).unwrap();
        prop_assert!(pd.width <= cut_profile(&g, &l).unwrap().max_width);
    }

    #[test]
    fn text_formats_round_trip((g, l) in graph_and_layout(12)) {
        prop_assert_eq!(&parse_graph(&write_graph(&g)).unwrap(), &g);
        prop_assert_eq!(&graph_from_json(&graph_to_json(&g)).unwrap(), &g);
        prop_assert_eq!(&parse_dot(&to_dot(&g)).unwrap(), &g);
        prop_assert_eq!(parse_layout(&write_layout(&l), g.vertex_count()).unwrap(), l);
    }
}

#[test]
fn small_cutwidths() {
    assert_eq!(exact_cutwidth(&Graph::empty(0)).unwrap().0, 0);
    assert_eq!(exact_cutwidth(&Graph::empty(1)).unwrap().0, 0);
    assert_eq!(exact_cutwidth(&Graph::path(6)).unwrap().0, 1);
    assert_eq!(exact_cutwidth(&Graph::cycle(6)).unwrap().0, 2);
    assert_eq!(exact_cutwidth(&Graph::complete(4)).unwrap().0, 4);
    assert_eq!(exact_cutwidth(&Graph::star(4)).unwrap().0, 2);
}
