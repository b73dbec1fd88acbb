//! The 18-vertex vertex-cover crossing graph with terminals `p, q, x, y`, and
//! the independent-set crossover gadget derived from it.
//!
//! Interior: two 5-cycles `a1..a5` and `b1..b5` joined by the edge `a5-b5`,
//! plus `nx1, nx2` (the neighbors of `x`) and `ny1, ny2` (the neighbors of `y`).
//! Each of `nx1, nx2, ny1, ny2` closes a triangle over one edge of a 5-cycle:
//! `{nx1, a1, a2}`, `{nx2, a3, a4}`, `{ny1, b1, b2}`, `{ny2, b3, b4}`.

use crate::gadgets::{CrossoverGadget, Problem};
use crate::graph::{Edge, Graph, GraphBuilder};
use crate::layout::LinearLayout;

#[derive(Clone, Debug)]
pub struct Hvc {
    pub graph: Graph,
    pub x: usize,
    pub y: usize,
    pub p: usize,
    pub q: usize,
}

const ROLES: [&str; 18] = [
    "x", "y", "p", "q", "nx1", "nx2", "ny1", "ny2", "a1", "a2", "a3", "a4", "a5", "b1", "b2", "b3", "b4", "b5",
];

const EDGES: [(usize, usize); 31] = [
    // 5-cycles and the edge joining them
    (8, 9), (9, 10), (10, 11), (11, 12), (12, 8),
    (13, 14), (14, 15), (15, 16), (16, 17), (17, 13),
    (12, 17),
    // triangle apexes
    (4, 8), (4, 9), (5, 10), (5, 11), (6, 13), (6, 14), (7, 15), (7, 16),
    // x and y
    (0, 4), (0, 5), (1, 6), (1, 7),
    // p
    (2, 4), (2, 6), (2, 8), (2, 13),
    // q
    (3, 5), (3, 7), (3, 11), (3, 16),
];

pub fn hvc_graph() -> Hvc {
    let labels = ROLES.iter().enumerate().map(|(i, r)| (i, r.to_string())).collect();
    let graph = Graph::from_edges(18, EDGES).and_then(|g| g.with_labels(labels)).expect("static graph is simple");
    Hvc { graph, x: 0, y: 1, p: 2, q: 3 }
}

impl Hvc {
    /// Terminals in the order `p, q, x, y`.
    pub fn terminals(&self) -> [usize; 4] {
        [self.p, self.q, self.x, self.y]
    }

    pub fn interior(&self) -> Vec<usize> {
        let t = self.terminals();
        (0..self.graph.vertex_count()).filter(|v| !t.contains(v)).collect()
    }

    /// Minimum number of interior vertices in a vertex cover, indexed by the
    /// set of terminals it contains (bit 0 = p, 1 = q, 2 = x, 3 = y).
    pub fn axis_profile(&self) -> [usize; 16] {
        let g = &self.graph;
        let n = g.vertex_count();
        let edges: Vec<u64> = g.edges().iter().map(|e| (1u64 << e.0) | (1u64 << e.1)).collect();
        let t = self.terminals();
        let tmask: u64 = t.iter().map(|&v| 1u64 << v).sum();
        let mut best = [usize::MAX; 16];
        for s in 0u64..(1 << n) {
            if edges.iter().any(|&e| s & e == 0) {
                continue;
            }
            let pattern = t.iter().enumerate().filter(|(_, &v)| s & (1 << v) != 0).map(|(i, _)| 1usize << i).sum::<usize>();
            let inner = (s & !tmask).count_ones() as usize;
            best[pattern] = best[pattern].min(inner);
        }
        best
    }

    /// Smallest vertex cover containing `required`, as (total size, interior vertices).
    pub fn min_cover_containing(&self, required: &[usize]) -> (usize, usize) {
        let t = self.terminals();
        let need: usize = required.iter().map(|r| 1usize << t.iter().position(|v| v == r).expect("terminal")).sum();
        self.axis_profile()
            .iter()
            .enumerate()
            .filter(|(pat, &c)| pat & need == need && c != usize::MAX)
            .map(|(pat, &c)| (pat.count_ones() as usize + c, c))
            .min()
            .expect("the full vertex set covers")
    }

    /// Partitions the interior into four disjoint triangles and one edge, if possible.
    pub fn interior_partition(&self) -> Option<(Vec<[usize; 3]>, Edge)> {
        let inner = self.interior();
        let mut used = vec![false; self.graph.vertex_count()];
        let mut tris = Vec::new();
        let mut edge = None;
        if partition(&self.graph, &inner, &mut used, &mut tris, &mut edge) {
            Some((tris, edge.expect("set on success")))
        } else {
            None
        }
    }
}

fn partition(
    g: &Graph,
    inner: &[usize],
    used: &mut [bool],
    tris: &mut Vec<[usize; 3]>,
    edge: &mut Option<Edge>,
) -> bool {
    let Some(&v) = inner.iter().find(|&&v| !used[v]) else {
        return tris.len() == 4 && edge.is_some();
    };
    used[v] = true;
    let free: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| inner.contains(&w) && !used[w]).collect();
    if tris.len() < 4 {
        for (i, &a) in free.iter().enumerate() {
            for &b in &free[i + 1..] {
                if g.has_edge(a, b) {
                    used[a] = true;
                    used[b] = true;
                    tris.push([v, a, b]);
                    if partition(g, inner, used, tris, edge) {
                        return true;
                    }
                    tris.pop();
                    used[a] = false;
                    used[b] = false;
                }
            }
        }
    }
    if edge.is_none() {
        for &a in &free {
            used[a] = true;
            *edge = Some(Edge::new(v, a));
            if partition(g, inner, used, tris, edge) {
                return true;
            }
            *edge = None;
            used[a] = false;
        }
    }
    used[v] = false;
    false
}

/// True iff every vertex cover `S` has at least `9 + ℓ` interior vertices,
/// where `ℓ` counts the axes `{p, q}` and `{x, y}` that `S` misses entirely,
/// and some cover meeting both axes uses exactly nine.
pub fn verify_prop_axes(hvc: &Hvc) -> bool {
    let profile = hvc.axis_profile();
    let mut tight = false;
    for (pat, &c) in profile.iter().enumerate() {
        if c == usize::MAX {
            continue;
        }
        let ell = usize::from(pat & 0b0011 == 0) + usize::from(pat & 0b1100 == 0);
        if c < 9 + ell {
            return false;
        }
        tight |= ell == 0 && c == 9;
    }
    tight
}

/// Hardcoded minimum-cutwidth layout of the independent-set gadget.
const IS_LAYOUT: [usize; 22] = [19, 15, 1, 7, 16, 14, 6, 13, 17, 21, 3, 12, 11, 5, 10, 20, 2, 18, 8, 9, 4, 0];

/// Independent-set crossover gadget with shift 9: the vertex-cover crossing
/// graph plus one pendant terminal on each of its terminals, `u ~ x`,
/// `u' ~ y`, `v ~ p`, `v' ~ q`.
pub fn is_crossover_gadget() -> CrossoverGadget {
    let hvc = hvc_graph();
    let mut b = GraphBuilder::new();
    b.add_graph(&hvc.graph, None);
    let mut terms = [0; 4];
    for (slot, (name, anchor)) in [("u", hvc.x), ("u'", hvc.y), ("v", hvc.p), ("v'", hvc.q)].into_iter().enumerate() {
        let t = b.add_labeled_vertex(name);
        b.add_edge(t, anchor).expect("fresh vertex");
        terms[slot] = t;
    }
    let h = b.build();
    let layout = LinearLayout::new(IS_LAYOUT.to_vec()).expect("static permutation");
    CrossoverGadget::new(Problem::Is, h, terms, layout, 9).expect("static gadget is well formed")
}
