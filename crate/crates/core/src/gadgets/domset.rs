//! Dominating-set machinery: the double-path edge replacement (+6), the
//! triangle-crossing replacement by the vertex-cover crossing graph (+9), and
//! the composite crossover gadget built from them (+48).
//!
//! Each side `s` of a double path on the edge `{x, y}` is the chain
//! `s - a - b - c - d - e`, the triangle `{e, f, t}`, the path `f - t' - g` and
//! the triangle `{g, h, t''}`. The two sides are joined by `h_x - c_y` and
//! `h_y - c_x`.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::gadgets::vertex_cover::hvc_graph;
use crate::gadgets::{CrossoverGadget, Problem};
use crate::graph::{Graph, GraphBuilder};
use crate::solvers::brute::{min_dominating_with, DEFAULT_BRUTE_LIMIT};
use crate::solvers::heuristic_layout;

pub const SIDE_ROLES: [&str; 11] = ["a", "b", "c", "d", "e", "f", "t", "t'", "g", "h", "t''"];
const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const E: usize = 4;
const F: usize = 5;
const T: usize = 6;
const G: usize = 8;
const H: usize = 9;
const T2: usize = 10;

const SIDE_EDGES: [(usize, usize); 12] =
    [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6), (5, 7), (7, 8), (8, 9), (8, 10), (9, 10)];

/// Vertex ids of an inserted double path, indexed by [`SIDE_ROLES`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoublePath {
    pub x_side: [usize; 11],
    pub y_side: [usize; 11],
}

impl DoublePath {
    pub fn side(&self, s: Side) -> &[usize; 11] {
        match s {
            Side::X => &self.x_side,
            Side::Y => &self.y_side,
        }
    }

    pub fn interior(&self) -> Vec<usize> {
        self.x_side.iter().chain(&self.y_side).copied().collect()
    }

    /// `(base, base, apex)` of one of the four triangles.
    pub fn triangle(&self, s: Side, which: Tri) -> [usize; 3] {
        let v = self.side(s);
        match which {
            Tri::First => [v[E], v[F], v[T]],
            Tri::Second => [v[G], v[H], v[T2]],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    X,
    Y,
}

/// The triangle `{e, f, t}` or `{g, h, t''}` of a side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tri {
    First,
    Second,
}

fn double_path_into(b: &mut GraphBuilder, x: usize, y: usize, tag: &str) -> Result<DoublePath> {
    if !b.remove_edge(x, y) {
        return Err(Error::MissingEdge(x.min(y), x.max(y)));
    }
    let mut side = |end: usize, s: &str| -> Result<[usize; 11]> {
        let mut ids = [0; 11];
        for (i, role) in SIDE_ROLES.iter().enumerate() {
            ids[i] = b.add_labeled_vertex(format!("{tag}:{role}_{s}"));
        }
        for (p, q) in SIDE_EDGES {
            b.add_edge(ids[p], ids[q])?;
        }
        b.add_edge(end, ids[A])?;
        Ok(ids)
    };
    let xs = side(x, "x")?;
    let ys = side(y, "y")?;
    b.add_edge(xs[H], ys[C])?;
    b.add_edge(ys[H], xs[C])?;
    Ok(DoublePath { x_side: xs, y_side: ys })
}

/// Replaces the edge `{x, y}` by a double path; the first endpoint plays `x`.
pub fn insert_double_path(g: &Graph, e: (usize, usize)) -> Result<Graph> {
    Ok(insert_double_path_with_roles(g, e)?.0)
}

/// As [`insert_double_path`], also returning the ids of the inserted vertices.
/// Existing vertices keep their ids.
pub fn insert_double_path_with_roles(g: &Graph, e: (usize, usize)) -> Result<(Graph, DoublePath)> {
    let (x, y) = e;
    if x >= g.vertex_count() || y >= g.vertex_count() || !g.has_edge(x, y) {
        return Err(Error::MissingEdge(x, y));
    }
    let mut b = g.to_builder();
    let dp = double_path_into(&mut b, x, y, "dp")?;
    Ok((b.build(), dp))
}

fn closed_nbhd(g: &Graph, v: usize) -> Vec<usize> {
    let mut n = g.neighbors(v).to_vec();
    n.push(v);
    n
}

fn dominates(g: &Graph, set: &[usize], targets: &[usize]) -> bool {
    targets.iter().all(|&t| set.contains(&t) || g.neighbors(t).iter().any(|w| set.contains(w)))
}

/// The structural facts the +6 argument relies on: the closed neighborhoods
/// of `b, t, t''` on both sides lie inside the double path and are pairwise
/// disjoint; `{b, e, g}` on both sides dominates the interior; and
/// `{c_x, f_x, h_x, e_y, g_y, a_y}` dominates `y` and everything inside except
/// `a_x` (and symmetrically).
pub fn check_double_path_gates(g: &Graph, dp: &DoublePath, x: usize, y: usize) -> Result<()> {
    let inner = dp.interior();
    let fail = |what: &str| Err(Error::Verification(format!("double path: {what}")));
    let (xs, ys) = (&dp.x_side, &dp.y_side);
    let private = [xs[B], ys[B], xs[T], ys[T], xs[T2], ys[T2]];
    let nbhds: Vec<Vec<usize>> = private.iter().map(|&v| closed_nbhd(g, v)).collect();
    for (i, n) in nbhds.iter().enumerate() {
        if !n.iter().all(|v| inner.contains(v)) {
            return fail("a private neighborhood leaves the structure");
        }
        for m in &nbhds[i + 1..] {
            if n.iter().any(|v| m.contains(v)) {
                return fail("private neighborhoods overlap");
            }
        }
    }
    if !dominates(g, &[xs[B], ys[B], xs[E], ys[E], xs[G], ys[G]], &inner) {
        return fail("{b, e, g} on both sides does not dominate the interior");
    }
    for (own, other, far) in [(xs, ys, y), (ys, xs, x)] {
        let set = [own[C], own[F], own[H], other[E], other[G], other[A]];
        let mut targets: Vec<usize> = inner.iter().copied().filter(|&v| v != own[A]).collect();
        targets.push(far);
        if !dominates(g, &set, &targets) {
            return fail("the one-sided pattern does not dominate");
        }
    }
    Ok(())
}

fn triangle_crossing_into(
    b: &mut GraphBuilder,
    t1: [usize; 3],
    t2: [usize; 3],
    tag: &str,
) -> Result<Vec<usize>> {
    let hvc = hvc_graph();
    let [x, y, z] = t1;
    let [p, q, r] = t2;
    b.remove_vertex(z)?;
    b.remove_vertex(r)?;
    b.remove_edge(x, y);
    b.remove_edge(p, q);
    let mut ids = vec![usize::MAX; hvc.graph.vertex_count()];
    ids[hvc.x] = x;
    ids[hvc.y] = y;
    ids[hvc.p] = p;
    ids[hvc.q] = q;
    for v in hvc.interior() {
        ids[v] = b.add_labeled_vertex(format!("{tag}:{}", hvc.graph.label(v).unwrap_or("?")));
    }
    for (i, e) in hvc.graph.edges().iter().enumerate() {
        let (s, t) = (ids[e.0], ids[e.1]);
        b.add_edge(s, t)?;
        let w = b.add_labeled_vertex(format!("{tag}:w{i}"));
        b.add_edge(w, s)?;
        b.add_edge(w, t)?;
    }
    Ok(ids)
}

/// Replaces the crossing triangles `{x, y, z}` and `{p, q, r}` (apexes `z`,
/// `r` of degree two): deletes `z`, `r` and the base edges `x-y`, `p-q`,
/// inserts the vertex-cover crossing graph with its terminals identified with
/// `x, y, p, q`, and gives every edge of that copy a private degree-two vertex.
pub fn replace_triangle_crossing(g: &Graph, t1: [usize; 3], t2: [usize; 3]) -> Result<Graph> {
    let n = g.vertex_count();
    let all = [t1, t2].concat();
    if all.iter().any(|&v| v >= n) {
        return Err(Error::Precondition("triangle vertex out of range".into()));
    }
    for i in 0..6 {
        if all[..i].contains(&all[i]) {
            return Err(Error::Precondition("triangles are not vertex-disjoint".into()));
        }
    }
    for [a, b, c] in [t1, t2] {
        if !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
            return Err(Error::Precondition(format!("{{{a}, {b}, {c}}} is not a triangle")));
        }
        if g.degree(c) != 2 {
            return Err(Error::Precondition(format!("apex {c} has degree {}", g.degree(c))));
        }
    }
    let mut b = g.to_builder();
    triangle_crossing_into(&mut b, t1, t2, "vc")?;
    Ok(b.build())
}

/// One triangle-crossing step of the composite: a triangle of the horizontal
/// double path, a triangle of the vertical one, and whether to reverse each
/// base before identifying it with `x, y` (horizontal) or `p, q` (vertical).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingStep {
    pub horizontal: (Side, Tri),
    pub vertical: (Side, Tri),
    pub flip_horizontal: bool,
    pub flip_vertical: bool,
}

pub const COMPOSITE_STEPS: [CrossingStep; 4] = [
    CrossingStep { horizontal: (Side::X, Tri::First), vertical: (Side::Y, Tri::First), flip_horizontal: false, flip_vertical: false },
    CrossingStep { horizontal: (Side::X, Tri::Second), vertical: (Side::X, Tri::Second), flip_horizontal: false, flip_vertical: false },
    CrossingStep { horizontal: (Side::Y, Tri::Second), vertical: (Side::Y, Tri::Second), flip_horizontal: false, flip_vertical: false },
    CrossingStep { horizontal: (Side::Y, Tri::First), vertical: (Side::X, Tri::First), flip_horizontal: false, flip_vertical: false },
];

fn oriented(t: [usize; 3], flip: bool) -> [usize; 3] {
    if flip {
        [t[1], t[0], t[2]]
    } else {
        t
    }
}

/// Runs the staged construction on the crossing edges `{a, b}` and `{c, d}` of
/// `g`: a double path on each edge, then the four triangle-crossing steps.
/// Returns the graph and, for both double paths, the final ids of `a_x` and
/// `a_y`.
pub fn compose_crossing(
    g: &Graph,
    e1: (usize, usize),
    e2: (usize, usize),
    steps: &[CrossingStep; 4],
) -> Result<(Graph, [usize; 4])> {
    let (stages, terms) = staged(g, e1, e2, steps)?;
    Ok((stages.into_iter().last().expect("six stages"), terms))
}

/// The graph after each of the six steps of [`compose_crossing`].
pub fn compose_crossing_stages(
    g: &Graph,
    e1: (usize, usize),
    e2: (usize, usize),
    steps: &[CrossingStep; 4],
) -> Result<Vec<Graph>> {
    Ok(staged(g, e1, e2, steps)?.0)
}

fn staged(
    g: &Graph,
    e1: (usize, usize),
    e2: (usize, usize),
    steps: &[CrossingStep; 4],
) -> Result<(Vec<Graph>, [usize; 4])> {
    let mut b = g.to_builder();
    let mut stages = Vec::with_capacity(6);
    let dp1 = double_path_into(&mut b, e1.0, e1.1, "h")?;
    stages.push(b.clone().build());
    let dp2 = double_path_into(&mut b, e2.0, e2.1, "v")?;
    stages.push(b.clone().build());
    for (k, s) in steps.iter().enumerate() {
        let t1 = oriented(dp1.triangle(s.horizontal.0, s.horizontal.1), s.flip_horizontal);
        let t2 = oriented(dp2.triangle(s.vertical.0, s.vertical.1), s.flip_vertical);
        triangle_crossing_into(&mut b, t1, t2, &format!("vc{}", k + 1))?;
        stages.push(b.clone().build());
    }
    let (_, map) = b.build_with_map();
    let term = |v: usize| map[v].expect("attachment vertices survive");
    Ok((stages, [term(dp1.x_side[A]), term(dp1.y_side[A]), term(dp2.x_side[A]), term(dp2.y_side[A])]))
}

/// The composite gadget for a template crossing, with the template endpoints
/// removed. Terminals are the `a_x`, `a_y` vertices of the two double paths.
pub fn composite_graph(steps: &[CrossingStep; 4]) -> Result<(Graph, [usize; 4])> {
    let template = Graph::from_edges(4, [(0, 1), (2, 3)])?;
    let (g, terms) = compose_crossing(&template, (0, 1), (2, 3), steps)?;
    let mut b = g.to_builder();
    for v in 0..4 {
        b.remove_vertex(v)?;
    }
    let (h, map) = b.build_with_map();
    Ok((h, terms.map(|t| map[t].expect("terminals survive"))))
}

/// Dominating-set crossover gadget with shift `48 = 2·6 + 4·9`.
pub fn ds_crossover_gadget() -> CrossoverGadget {
    static GADGET: OnceLock<CrossoverGadget> = OnceLock::new();
    GADGET
        .get_or_init(|| {
            let (h, terms) = composite_graph(&COMPOSITE_STEPS).expect("static construction");
            let layout = heuristic_layout(&h);
            CrossoverGadget::new(Problem::Ds, h, terms, layout, 48).expect("well formed")
        })
        .clone()
}

fn brute_gate(g: &Graph) -> Result<()> {
    if g.vertex_count() > DEFAULT_BRUTE_LIMIT {
        return Err(Error::OracleLimit { n: g.vertex_count(), limit: DEFAULT_BRUTE_LIMIT });
    }
    Ok(())
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Greedily picks a maximal independent set `I` of simplicial degree-two
/// vertices and checks that some minimum dominating set avoids `I`.
pub fn verify_simplicial_avoidance(g: &Graph) -> Result<bool> {
    brute_gate(g)?;
    let mut banned = 0u64;
    for v in 0..g.vertex_count() {
        let nb = g.neighbors(v);
        if nb.len() == 2 && g.has_edge(nb[0], nb[1]) && nb.iter().all(|&w| banned & (1 << w) == 0) {
            banned |= 1 << v;
        }
    }
    Ok(min_dominating_with(g, full_mask(g.vertex_count()), |s| s & banned == 0)?.is_some())
}

/// Checks that some minimum dominating set covers every edge of `G[U]`.
/// Each such edge must have a private watcher outside `U` whose neighborhood
/// is exactly the edge.
pub fn verify_domset_is_vc(g: &Graph, u_set: &[usize]) -> Result<bool> {
    brute_gate(g)?;
    let n = g.vertex_count();
    if let Some(&v) = u_set.iter().find(|&&v| v >= n) {
        return Err(Error::Precondition(format!("vertex {v} is not in the graph")));
    }
    let inner: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|e| u_set.contains(&e.0) && u_set.contains(&e.1))
        .map(|e| (e.0, e.1))
        .collect();
    for &(a, b) in &inner {
        let watched = (0..n).any(|w| !u_set.contains(&w) && g.neighbors(w) == [a, b]);
        if !watched {
            return Err(Error::Precondition(format!("edge {{{a}, {b}}} has no degree-two watcher outside U")));
        }
    }
    Ok(min_dominating_with(g, full_mask(n), |s| inner.iter().all(|&(a, b)| s & ((1 << a) | (1 << b)) != 0))?
        .is_some())
}
