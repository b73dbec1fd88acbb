//! Arc-diagram drawings of a layout: vertices on the x-axis at positions
//! `1..=n`, every edge a semicircle above the axis.
//!
//! Two arcs cross exactly when their position intervals strictly interleave.
//! Crossing coordinates are exact rationals. Coincident x-coordinates are
//! separated by a symbolic perturbation: vertex `v` sits at `π(v) + ε·δ(π(v))`
//! for a fixed pseudo-random `δ` and infinitesimal `ε`, and elements are
//! compared by the Taylor coefficients of their x-coordinate in `ε`. Only when
//! all of those agree does the edge pair decide.

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::layout::LinearLayout;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub edge: Edge,
    /// 1-based positions of the endpoints, `left < right`.
    pub left: usize,
    pub right: usize,
    pub center: BigRational,
    pub radius: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    /// The crossing edges, ordered by vertex ids.
    pub edges: (Edge, Edge),
    pub x: BigRational,
    /// First, second and third order coefficients of x under the perturbation.
    pub tiebreak: [BigRational; 3],
}

#[derive(Clone, Debug)]
pub struct ArcDrawing {
    pub graph: Graph,
    pub layout: LinearLayout,
    pub arcs: Vec<Arc>,
    pub crossings: Vec<Crossing>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    Vertex(usize),
    /// Index into `ArcDrawing::crossings`.
    Crossing(usize),
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Perturbation direction of the vertex at 1-based position `p`.
pub fn perturbation(p: usize) -> i64 {
    (splitmix64(p as u64) % 1_000_003) as i64 + 1
}

pub fn build_arc_drawing(g: &Graph, layout: &LinearLayout) -> Result<ArcDrawing> {
    layout.check_for(g)?;
    let p = |v: usize| layout.position(v) + 1;
    let mut arcs: Vec<Arc> = g
        .edges()
        .iter()
        .map(|&e| {
            let (l, r) = if p(e.0) < p(e.1) { (p(e.0), p(e.1)) } else { (p(e.1), p(e.0)) };
            Arc {
                edge: e,
                left: l,
                right: r,
                center: BigRational::new(BigInt::from(l + r), BigInt::from(2)),
                radius: BigRational::new(BigInt::from(r - l), BigInt::from(2)),
            }
        })
        .collect();
    arcs.sort_by_key(|a| (a.left, a.right, a.edge));

    let mut crossings = Vec::new();
    for (i, a) in arcs.iter().enumerate() {
        for b in &arcs[i + 1..] {
            if b.left >= a.right {
                break;
            }
            if a.left < b.left && b.left < a.right && a.right < b.right {
                crossings.push(crossing_of(a, b));
            }
        }
    }
    Ok(ArcDrawing { graph: g.clone(), layout: layout.clone(), arcs, crossings })
}

fn crossing_of(a: &Arc, b: &Arc) -> Crossing {
    let (m1, r1, m2, r2) = (&a.center, &a.radius, &b.center, &b.radius);
    let x = (m1 * m1 - m2 * m2 + r2 * r2 - r1 * r1) / (rat(2) * (m1 - m2));

    // x = (P_a P_b - P_c P_d) / (P_a + P_b - P_c - P_d) with perturbed positions
    let (pa, pb, pc, pd) = (a.left as i64, a.right as i64, b.left as i64, b.right as i64);
    let (da, db, dc, dd) = (
        perturbation(a.left),
        perturbation(a.right),
        perturbation(b.left),
        perturbation(b.right),
    );
    let n1 = rat(pa * db + pb * da - pc * dd - pd * dc);
    let n2 = rat(da) * rat(db) - rat(dc) * rat(dd);
    let d0 = rat(pa + pb - pc - pd);
    let d1 = rat(da + db - dc - dd);
    let q1 = (n1 - &x * &d1) / &d0;
    let q2 = (n2 - &q1 * &d1) / &d0;
    let q3 = -(&q2 * &d1) / &d0;

    let edges = if a.edge < b.edge { (a.edge, b.edge) } else { (b.edge, a.edge) };
    Crossing { edges, x, tiebreak: [q1, q2, q3] }
}

impl ArcDrawing {
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    fn key(&self, el: Element) -> ([BigRational; 4], u8, (Edge, Edge)) {
        match el {
            Element::Vertex(v) => {
                let p = self.layout.position(v) + 1;
                (
                    [rat(p as i64), rat(perturbation(p)), BigRational::zero(), BigRational::zero()],
                    0,
                    (Edge(v, v), Edge(v, v)),
                )
            }
            Element::Crossing(i) => {
                let c = &self.crossings[i];
                (
                    [c.x.clone(), c.tiebreak[0].clone(), c.tiebreak[1].clone(), c.tiebreak[2].clone()],
                    1,
                    c.edges,
                )
            }
        }
    }

    fn compare(&self, a: Element, b: Element) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    /// Left endpoint (by layout) of an edge.
    pub fn left_end(&self, e: Edge) -> usize {
        if self.layout.position(e.0) < self.layout.position(e.1) {
            e.0
        } else {
            e.1
        }
    }

    pub fn right_end(&self, e: Edge) -> usize {
        if self.left_end(e) == e.0 {
            e.1
        } else {
            e.0
        }
    }

    /// Arc-diagram SVG: vertices as labeled dots, edges as semicircles,
    /// crossings as small red markers.
    pub fn to_svg(&self) -> String {
        const STEP: f64 = 60.0;
        const MARGIN: f64 = 30.0;
        let n = self.layout.len();
        let max_r = self.arcs.iter().map(|a| (a.right - a.left) as f64 / 2.0).fold(0.0, f64::max);
        let width = MARGIN * 2.0 + STEP * (n.max(1) - 1) as f64;
        let base = MARGIN + max_r * STEP;
        let height = base + MARGIN;
        let xs = |p: f64| MARGIN + (p - 1.0) * STEP;

        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.1} {height:.1}">"#
        );
        let _ = writeln!(s, r#"<g class="arcs" fill="none" stroke="black" stroke-width="1">"#);
        for a in &self.arcs {
            let r = (a.right - a.left) as f64 / 2.0 * STEP;
            let _ = writeln!(
                s,
                r#"<path d="M {:.3} {:.3} A {:.3} {:.3} 0 0 1 {:.3} {:.3}"/>"#,
                xs(a.left as f64),
                base,
                r,
                r,
                xs(a.right as f64),
                base
            );
        }
        let _ = writeln!(s, "</g>");
        let _ = writeln!(s, r#"<g class="crossings" fill="red">"#);
        for c in &self.crossings {
            let arc = self.arcs.iter().find(|a| a.edge == c.edges.0).expect("crossing edge has an arc");
            let x = c.x.to_f64().unwrap_or(0.0);
            let m = arc.center.to_f64().unwrap_or(0.0);
            let r = arc.radius.to_f64().unwrap_or(0.0);
            let y = (r * r - (x - m) * (x - m)).max(0.0).sqrt();
            let _ = writeln!(s, r#"<circle class="crossing" cx="{:.3}" cy="{:.3}" r="3"/>"#, xs(x), base - y * STEP);
        }
        let _ = writeln!(s, "</g>");
        let _ = writeln!(s, r#"<g class="vertices">"#);
        for (i, &v) in self.layout.order().iter().enumerate() {
            let x = xs((i + 1) as f64);
            let label = self.graph.label(v).map(str::to_owned).unwrap_or_else(|| (v + 1).to_string());
            let _ = writeln!(s, r#"<circle class="vertex" cx="{x:.3}" cy="{base:.3}" r="4" fill="black"/>"#);
            let _ = writeln!(
                s,
                r#"<text x="{x:.3}" y="{:.3}" font-size="10" text-anchor="middle">{}</text>"#,
                base + 16.0,
                escape(&label)
            );
        }
        let _ = writeln!(s, "</g>");
        s.push_str("</svg>\n");
        s
    }
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// All vertices and crossings in strictly increasing x-order.
pub fn element_order(d: &ArcDrawing) -> Vec<Element> {
    let mut els: Vec<Element> = (0..d.layout.len())
        .map(Element::Vertex)
        .chain((0..d.crossings.len()).map(Element::Crossing))
        .collect();
    els.sort_by(|&a, &b| d.compare(a, b));
    els
}

/// Edges whose arc spans the vertical line at `x0`.
pub fn vertical_cut_edges(d: &ArcDrawing, x0: &BigRational) -> Result<Vec<Edge>> {
    if x0.is_integer() {
        let p = x0.to_integer();
        if p >= BigInt::from(1) && p <= BigInt::from(d.layout.len()) {
            return Err(Error::Precondition(format!("x = {x0} coincides with a vertex position")));
        }
    }
    Ok(d
        .arcs
        .iter()
        .filter(|a| rat(a.left as i64) < *x0 && *x0 < rat(a.right as i64))
        .map(|a| a.edge)
        .collect())
}
