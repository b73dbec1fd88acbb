//! Seeded random graphs and exhaustive small-graph enumeration for oracle runs.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Edge, Graph};

/// Erdős–Rényi graph `G(n, p)`.
pub fn gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, edges).expect("pairs are distinct")
}

/// A random graph on `1..=max_n` vertices with edge density drawn from `[0.15, 0.6]`.
pub fn random_graph<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.15..0.6);
    gnp(rng, n, p)
}

pub fn random_layout<R: Rng>(rng: &mut R, n: usize) -> crate::layout::LinearLayout {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    crate::layout::LinearLayout::new(order).expect("shuffled identity")
}

pub fn disjoint_edge_pairs(g: &Graph) -> Vec<(Edge, Edge)> {
    let e = g.edges();
    let mut out = Vec::new();
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            if !e[i].shares_endpoint(&e[j]) {
                out.push((e[i], e[j]));
            }
        }
    }
    out
}

/// Random graph on `4..=max_n` vertices that contains two disjoint edges.
pub fn host_with_disjoint_edges<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    loop {
        let n = rng.gen_range(4..=max_n.max(4));
        let p = rng.gen_range(0.2..0.7);
        let g = gnp(rng, n, p);
        if !disjoint_edge_pairs(&g).is_empty() {
            return g;
        }
    }
}

/// Random graph on at most `max_n` vertices with at least one edge.
pub fn host_with_edge<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    loop {
        let n = rng.gen_range(2..=max_n.max(2));
        let p = rng.gen_range(0.2..0.7);
        let g = gnp(rng, n, p);
        if g.edge_count() > 0 {
            return g;
        }
    }
}

/// Every labelled graph on `n` vertices (`2^(n(n-1)/2)` of them).
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("pairs are distinct")
    })
}

/// A host holding two vertex-disjoint triangles `{x, y, z}` and `{p, q, r}`
/// whose apexes `z` and `r` have degree two.
#[derive(Clone, Debug)]
pub struct TriangleHost {
    pub graph: Graph,
    pub t1: [usize; 3],
    pub t2: [usize; 3],
}

/// Random base graph on `4..=max_base` vertices; four distinct base vertices
/// are joined in pairs and each pair gets a fresh degree-two apex.
pub fn triangle_host<R: Rng>(rng: &mut R, max_base: usize) -> TriangleHost {
    let n = rng.gen_range(4..=max_base.max(4));
    let p = rng.gen_range(0.2..0.6);
    let base = gnp(rng, n, p);
    let mut picks: Vec<usize> = (0..n).collect();
    picks.shuffle(rng);
    let (x, y, pp, q) = (picks[0], picks[1], picks[2], picks[3]);
    let mut b = base.to_builder();
    let z = b.add_vertex();
    let r = b.add_vertex();
    for (s, t) in [(x, y), (x, z), (y, z), (pp, q), (pp, r), (q, r)] {
        b.add_edge(s, t).expect("vertices exist");
    }
    TriangleHost { graph: b.build(), t1: [x, y, z], t2: [pp, q, r] }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn enumeration_counts() {
        assert_eq!(all_graphs(4).count(), 64);
        assert_eq!(all_graphs(1).count(), 1);
    }

    #[test]
    fn triangle_hosts_have_degree_two_apexes() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let h = triangle_host(&mut rng, 6);
            assert_eq!(h.graph.degree(h.t1[2]), 2);
            assert_eq!(h.graph.degree(h.t2[2]), 2);
            assert!(h.graph.has_edge(h.t1[0], h.t1[1]));
        }
    }

    #[test]
    fn generators_are_seeded() {
        let a = random_graph(&mut ChaCha8Rng::seed_from_u64(9), 10);
        let b = random_graph(&mut ChaCha8Rng::seed_from_u64(9), 10);
        assert_eq!(a, b);
    }
}
