//! Crossing-by-crossing planarization of a layout's arc drawing.
//!
//! Crossings are replaced left to right. Every original edge keeps a tail, its
//! current left attachment vertex; a crossing joins both tails to the gadget's
//! left terminals `u`, `v` and advances them to `u'`, `v'`. The new layout
//! lists the elements of the drawing in x-order, with each gadget copy laid
//! out in its own stored order.

use serde::{Deserialize, Serialize};

use crate::drawing::{build_arc_drawing, element_order, Element};
use crate::error::{Error, Result};
use crate::gadgets::CrossoverGadget;
use crate::graph::{Graph, GraphBuilder};
use crate::layout::{cut_profile, layout_to_path_decomposition, CutProfile, LinearLayout};
use crate::planarity::is_planar;
use crate::solvers::heuristic_layout;

const HEURISTIC_LIMIT: usize = 3000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarizationResult {
    pub g_prime: Graph,
    pub layout_prime: LinearLayout,
    pub t_prime: i64,
    pub crossings_replaced: usize,
    pub width_in: usize,
    pub width_out: usize,
    pub gadget_width: usize,
    pub profile: CutProfile,
    /// Vertices `0..original_vertices` of `g_prime` are the input vertices.
    pub original_vertices: usize,
}

pub fn planarize(g: &Graph, layout: &LinearLayout, t: i64, gadget: &CrossoverGadget) -> Result<PlanarizationResult> {
    layout.check_for(g)?;
    gadget.check_usable()?;
    let n = g.vertex_count();
    let drawing = build_arc_drawing(g, layout)?;

    let mut b = GraphBuilder::with_vertices(n);
    for (&v, l) in g.labels() {
        b.set_label(v, l.clone());
    }
    let edges = g.edges();
    let mut tail: Vec<usize> = edges.iter().map(|&e| drawing.left_end(e)).collect();
    let index = |e| edges.binary_search(&e).expect("crossing edges belong to the graph");
    let mut order = Vec::with_capacity(n + drawing.crossings.len() * gadget.h.vertex_count());
    let mut replaced = 0;
    for el in element_order(&drawing) {
        match el {
            Element::Vertex(v) => order.push(v),
            Element::Crossing(c) => {
                let (e1, e2) = drawing.crossings[c].edges;
                let ids = gadget.copy_into(&mut b, &format!("gadget#{replaced}"));
                let [u, u2, v, v2] = gadget.terminals.map(|x| ids[x]);
                let (i1, i2) = (index(e1), index(e2));
                b.add_edge(tail[i1], u)?;
                b.add_edge(tail[i2], v)?;
                tail[i1] = u2;
                tail[i2] = v2;
                order.extend(gadget.layout.order().iter().map(|&x| ids[x]));
                replaced += 1;
            }
        }
    }
    for (i, &e) in edges.iter().enumerate() {
        b.add_edge(tail[i], drawing.right_end(e))?;
    }
    let g_prime = b.build();
    let layout_prime = LinearLayout::new(order)?;

    let width_in = cut_profile(g, layout)?.max_width;
    let gadget_width = gadget.width();
    let profile = cut_profile(&g_prime, &layout_prime)?;
    let result = PlanarizationResult {
        width_out: profile.max_width,
        g_prime,
        layout_prime,
        t_prime: t + replaced as i64 * gadget.shift,
        crossings_replaced: replaced,
        width_in,
        gadget_width,
        profile,
        original_vertices: n,
    };
    check_accounting(g, gadget, &result)?;
    check_gap_bounds(&result)?;
    if !is_planar(&result.g_prime) {
        return Err(Error::Verification("planarized graph is not planar".into()));
    }
    Ok(result)
}

fn check_accounting(g: &Graph, gadget: &CrossoverGadget, r: &PlanarizationResult) -> Result<()> {
    let l = r.crossings_replaced;
    let want_v = g.vertex_count() + l * gadget.h.vertex_count();
    let want_e = g.edge_count() + l * (gadget.h.edge_count() + 2);
    if r.g_prime.vertex_count() != want_v || r.g_prime.edge_count() != want_e {
        return Err(Error::Verification(format!(
            "expected {want_v} vertices and {want_e} edges, got {} and {}",
            r.g_prime.vertex_count(),
            r.g_prime.edge_count()
        )));
    }
    Ok(())
}

/// The cut after an input vertex is at most the input width; the cut after a
/// gadget vertex is at most input width + gadget width + 4.
pub fn check_gap_bounds(r: &PlanarizationResult) -> Result<()> {
    for (i, &w) in r.profile.widths.iter().enumerate() {
        let v = r.layout_prime.vertex_at(i);
        let (bound, kind) = if v < r.original_vertices {
            (r.width_in, "input")
        } else {
            (r.width_in + r.gadget_width + 4, "gadget")
        };
        if w > bound {
            return Err(Error::Verification(format!(
                "cut after {kind} vertex {v} at position {} is {w}, above the bound {bound}",
                i + 1
            )));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarizationCheck {
    pub planar: bool,
    pub width_bound: bool,
    pub gap_bounds: bool,
    pub target: bool,
    pub optimum_before: usize,
    pub optimum_after: usize,
    pub expected_shift: i64,
    pub dp_width: usize,
    pub dp_max_live_states: usize,
}

impl PlanarizationCheck {
    pub fn shift_ok(&self) -> bool {
        self.optimum_after as i64 - self.optimum_before as i64 == self.expected_shift
    }

    pub fn passes(&self) -> bool {
        self.planar && self.width_bound && self.gap_bounds && self.target && self.shift_ok()
    }
}

/// Re-checks a planarization: planarity, the width bounds, the target, and the
/// optimum shift `opt(G') = opt(G) + ℓ·c` (exhaustive search on `G`, layout DP
/// on `G'`).
pub fn verify_planarization(
    g: &Graph,
    t: i64,
    result: &PlanarizationResult,
    gadget: &CrossoverGadget,
) -> Result<PlanarizationCheck> {
    let gp = &result.g_prime;
    let shift = result.crossings_replaced as i64 * gadget.shift;
    let profile_ok = cut_profile(gp, &result.layout_prime).map(|p| p == result.profile).unwrap_or(false);
    let width_bound =
        profile_ok && result.width_out <= result.width_in + result.gadget_width + 4 && result.width_out == result.profile.max_width;
    let before = gadget.problem.brute(g)?;
    let layout = dp_layout(gp, &result.layout_prime)?;
    let rep = gadget.problem.dp(gp, &layout)?;
    Ok(PlanarizationCheck {
        planar: is_planar(gp),
        width_bound,
        gap_bounds: profile_ok && check_gap_bounds(result).is_ok(),
        target: result.t_prime == t + shift,
        optimum_before: before,
        optimum_after: rep.optimum,
        expected_shift: shift,
        dp_width: rep.width_used,
        dp_max_live_states: rep.max_live_states,
    })
}

/// The given layout or a heuristic one, whichever induces the narrower path decomposition.
pub fn dp_layout(g: &Graph, given: &LinearLayout) -> Result<LinearLayout> {
    if g.vertex_count() > HEURISTIC_LIMIT {
        return Ok(given.clone());
    }
    let alt = heuristic_layout(g);
    let w_given = layout_to_path_decomposition(g, given)?.width;
    let w_alt = layout_to_path_decomposition(g, &alt)?.width;
    Ok(if w_alt < w_given { alt } else { given.clone() })
}
