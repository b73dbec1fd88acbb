#![allow(dead_code)]

use cwplanar::{Graph, LinearLayout};
use proptest::prelude::*;

/// A graph on `1..=max_n` vertices together with a layout of it.
pub fn graph_and_layout(max_n: usize) -> impl Strategy<Value = (Graph, LinearLayout)> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            proptest::collection::vec(any::<bool>(), pairs),
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
        )
            .prop_map(move |(bits, order)| (graph_from_bits(n, &bits), LinearLayout::new(order).unwrap()))
    })
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for a in 0..n {
        for b in a + 1..n {
            if bits[k] {
                edges.push((a, b));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}
