//! Planarity testing, delegated to the left-right test in `rustworkx-core`.

use rustworkx_core::petgraph::graph::UnGraph;

use crate::graph::Graph;

pub fn is_planar(g: &Graph) -> bool {
    let mut pg = UnGraph::<(), ()>::with_capacity(g.vertex_count(), g.edge_count());
    let nodes: Vec<_> = (0..g.vertex_count()).map(|_| pg.add_node(())).collect();
    for e in g.edges() {
        pg.add_edge(nodes[e.0], nodes[e.1], ());
    }
    rustworkx_core::planar::is_planar(&pg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kuratowski_graphs() {
        assert!(is_planar(&Graph::complete(4)));
        assert!(!is_planar(&Graph::complete(5)));
        assert!(!is_planar(&Graph::complete_bipartite(3, 3)));
        assert!(is_planar(&Graph::complete_bipartite(2, 7)));
        assert!(is_planar(&Graph::empty(0)));
    }
}
