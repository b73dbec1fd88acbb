//! Crossover gadgets: a planar graph with four terminals `u, u', v, v'` that
//! replaces a crossing between the edges `{a, b}` and `{c, d}` by the edges
//! `a-u`, `u'-b`, `c-v`, `v'-d`.

pub mod boundary;
pub mod domset;
pub mod vertex_cover;

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, GraphBuilder};
use crate::io::GraphJson;
use crate::layout::{cut_profile, LinearLayout};
use crate::planarity::is_planar;
use crate::sample;
use crate::solvers::{brute_ds, brute_is, dp_ds, dp_is};

pub use boundary::{certify_is_gadget, is_boundary_function, BoundaryFunction, IsCertificate};
pub use domset::{
    ds_crossover_gadget, insert_double_path, replace_triangle_crossing, verify_domset_is_vc,
    verify_simplicial_avoidance,
};
pub use vertex_cover::{hvc_graph, is_crossover_gadget, verify_prop_axes, Hvc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    Is,
    Ds,
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Problem::Is => "is",
            Problem::Ds => "ds",
        })
    }
}

impl Problem {
    /// Exact optimum of a small graph by exhaustive search.
    pub fn brute(self, g: &Graph) -> Result<usize> {
        match self {
            Problem::Is => brute_is(g),
            Problem::Ds => brute_ds(g),
        }
    }

    /// Exact optimum by the layout DP.
    pub fn dp(self, g: &Graph, layout: &LinearLayout) -> Result<crate::solvers::DpReport> {
        match self {
            Problem::Is => dp_is(g, layout),
            Problem::Ds => dp_ds(g, layout),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossoverGadget {
    pub problem: Problem,
    pub h: Graph,
    /// `[u, u', v, v']`.
    pub terminals: [usize; 4],
    pub layout: LinearLayout,
    pub shift: i64,
}

#[derive(Serialize, Deserialize)]
struct GadgetJson {
    problem: Problem,
    shift: i64,
    terminals: [usize; 4],
    graph: GraphJson,
    layout: Vec<usize>,
}

impl CrossoverGadget {
    pub fn new(
        problem: Problem,
        h: Graph,
        terminals: [usize; 4],
        layout: LinearLayout,
        shift: i64,
    ) -> Result<CrossoverGadget> {
        for (i, &t) in terminals.iter().enumerate() {
            if t >= h.vertex_count() {
                return Err(Error::InvalidGraph(format!("terminal {t} is not a gadget vertex")));
            }
            if terminals[..i].contains(&t) {
                return Err(Error::InvalidGraph(format!("terminal {t} is listed twice")));
            }
        }
        layout.check_for(&h)?;
        Ok(CrossoverGadget { problem, h, terminals, layout, shift })
    }

    /// Cutwidth of the stored layout.
    pub fn width(&self) -> usize {
        cut_profile(&self.h, &self.layout).expect("layout checked on construction").max_width
    }

    /// The gadget plus an apex joined to all terminals plus the cycle
    /// `u-v-u'-v'-u` is planar exactly when the gadget has a planar embedding
    /// with the terminals on the outer face in that cyclic order.
    pub fn outer_face_certified(&self) -> bool {
        let [u, u2, v, v2] = self.terminals;
        let mut b = self.h.to_builder();
        let apex = b.add_vertex();
        for &t in &self.terminals {
            b.add_edge(apex, t).expect("fresh apex");
        }
        for (s, t) in [(u, v), (v, u2), (u2, v2), (v2, u)] {
            b.add_edge(s, t).expect("terminals exist");
        }
        is_planar(&b.build())
    }

    /// Errors unless the gadget passes the checks required before planarizing
    /// with it: outer-face certification, and for independent set the
    /// boundary-function certificate.
    pub fn check_usable(&self) -> Result<()> {
        if !self.outer_face_certified() {
            return Err(Error::UncertifiedGadget(
                "no planar embedding with terminals u, v, u', v' around the outer face".into(),
            ));
        }
        if self.problem == Problem::Is {
            let cert = boundary::certify_is_gadget_report(self)?;
            if !cert.passes() {
                return Err(Error::UncertifiedGadget(cert.summary()));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let j = GadgetJson {
            problem: self.problem,
            shift: self.shift,
            terminals: self.terminals.map(|t| t + 1),
            graph: GraphJson::from_graph(&self.h),
            layout: self.layout.order().iter().map(|v| v + 1).collect(),
        };
        serde_json::to_string_pretty(&j).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<CrossoverGadget> {
        let j: GadgetJson = serde_json::from_str(text)?;
        let h = j.graph.to_graph()?;
        let n = h.vertex_count();
        let one_based = |v: usize| {
            if v == 0 || v > n {
                Err(Error::InvalidGraph(format!("vertex id {v} outside 1..={n}")))
            } else {
                Ok(v - 1)
            }
        };
        let mut terminals = [0; 4];
        for (slot, &t) in terminals.iter_mut().zip(&j.terminals) {
            *slot = one_based(t)?;
        }
        let order = j.layout.iter().map(|&v| one_based(v)).collect::<Result<Vec<_>>>()?;
        CrossoverGadget::new(j.problem, h, terminals, LinearLayout::new(order)?, j.shift)
    }

    /// Copies the gadget into `b`, labelling each vertex `tag:role`, and returns
    /// the new ids of its vertices.
    pub(crate) fn copy_into(&self, b: &mut GraphBuilder, tag: &str) -> Vec<usize> {
        b.add_graph(&self.h, Some(tag))
    }
}

fn require_edge(g: &Graph, e: Edge) -> Result<()> {
    if e.0 >= g.vertex_count() || e.1 >= g.vertex_count() || !g.has_edge(e.0, e.1) {
        return Err(Error::MissingEdge(e.0, e.1));
    }
    Ok(())
}

/// Removes `{a, b}` and `{c, d}`, inserts a copy of the gadget and joins
/// `a-u`, `u'-b`, `c-v`, `v'-d`, where `a, b` and `c, d` are taken in the
/// order given.
pub fn replace_edges_by_gadget(
    g: &Graph,
    e1: (usize, usize),
    e2: (usize, usize),
    gadget: &CrossoverGadget,
) -> Result<Graph> {
    let (a, b) = e1;
    let (c, d) = e2;
    require_edge(g, Edge::new(a, b))?;
    require_edge(g, Edge::new(c, d))?;
    if Edge::new(a, b).shares_endpoint(&Edge::new(c, d)) {
        return Err(Error::SharedEndpoint);
    }
    let mut bld = g.to_builder();
    bld.remove_edge(a, b);
    bld.remove_edge(c, d);
    let ids = gadget.copy_into(&mut bld, "gadget#0");
    let [u, u2, v, v2] = gadget.terminals.map(|t| ids[t]);
    for (s, t) in [(a, u), (u2, b), (c, v), (v2, d)] {
        bld.add_edge(s, t)?;
    }
    Ok(bld.build())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HostTrial {
    pub host_vertices: usize,
    pub host_edges: usize,
    pub before: usize,
    pub after: usize,
    pub width_used: usize,
    pub max_live_states: usize,
}

impl HostTrial {
    pub fn shift(&self) -> i64 {
        self.after as i64 - self.before as i64
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HostReport {
    pub expected_shift: i64,
    pub trials: Vec<HostTrial>,
}

impl HostReport {
    pub fn passes(&self) -> bool {
        self.trials.iter().all(|t| t.shift() == self.expected_shift)
    }

    pub fn failures(&self) -> usize {
        self.trials.iter().filter(|t| t.shift() != self.expected_shift).count()
    }
}

/// Optimum after replacing two disjoint edges of `host` by `gadget`, computed
/// by the layout DP over the host order followed by the gadget block.
pub fn replaced_optimum(
    host: &Graph,
    e1: (usize, usize),
    e2: (usize, usize),
    gadget: &CrossoverGadget,
) -> Result<(Graph, crate::solvers::DpReport)> {
    let g2 = replace_edges_by_gadget(host, e1, e2, gadget)?;
    let n = host.vertex_count();
    let order: Vec<usize> = (0..n).chain(gadget.layout.order().iter().map(|&v| n + v)).collect();
    let report = gadget.problem.dp(&g2, &LinearLayout::new(order)?)?;
    Ok((g2, report))
}

/// One trial per host: a random pair of disjoint edges is replaced by the
/// gadget and the optimum shift is measured.
pub fn check_hosts(gadget: &CrossoverGadget, hosts: &[Graph], seed: u64) -> Result<HostReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut trials = Vec::new();
    for host in hosts {
        let pairs = sample::disjoint_edge_pairs(host);
        let Some(&(e1, e2)) = pairs.choose(&mut rng) else {
            return Err(Error::Precondition("host has no two disjoint edges".into()));
        };
        let (e1, e2) = orient(e1, e2, &mut rng);
        let before = gadget.problem.brute(host)?;
        let (_, rep) = replaced_optimum(host, e1, e2, gadget)?;
        trials.push(HostTrial {
            host_vertices: host.vertex_count(),
            host_edges: host.edge_count(),
            before,
            after: rep.optimum,
            width_used: rep.width_used,
            max_live_states: rep.max_live_states,
        });
    }
    Ok(HostReport { expected_shift: gadget.shift, trials })
}

fn orient<R: Rng>(e1: Edge, e2: Edge, rng: &mut R) -> ((usize, usize), (usize, usize)) {
    let a = if rng.gen() { (e1.0, e1.1) } else { (e1.1, e1.0) };
    let b = if rng.gen() { (e2.0, e2.1) } else { (e2.1, e2.0) };
    (a, b)
}

/// Random host checks with `count` hosts on at most `max_n` vertices.
pub fn check_random_hosts(gadget: &CrossoverGadget, count: usize, max_n: usize, seed: u64) -> Result<HostReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hosts: Vec<Graph> = (0..count).map(|_| sample::host_with_disjoint_edges(&mut rng, max_n)).collect();
    check_hosts(gadget, &hosts, seed.wrapping_add(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_edge_gadget() -> CrossoverGadget {
        let h = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        CrossoverGadget::new(Problem::Is, h, [0, 1, 2, 3], LinearLayout::identity(4), 0).unwrap()
    }

    #[test]
    fn replacement_unfolds_into_two_paths() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let g2 = replace_edges_by_gadget(&g, (0, 1), (2, 3), &two_edge_gadget()).unwrap();
        assert_eq!(g2.vertex_count(), 8);
        let want = [(0, 4), (4, 5), (5, 1), (2, 6), (6, 7), (7, 3)];
        assert_eq!(g2.edge_count(), want.len());
        for (a, b) in want {
            assert!(g2.has_edge(a, b));
        }
        assert_eq!(g2.label(5), Some("gadget#0:1"));
    }

    #[test]
    fn replacement_rejects_bad_edges() {
        let g = Graph::path(4);
        let gad = two_edge_gadget();
        assert!(matches!(replace_edges_by_gadget(&g, (0, 1), (0, 1), &gad), Err(Error::SharedEndpoint)));
        assert!(matches!(replace_edges_by_gadget(&g, (0, 1), (1, 2), &gad), Err(Error::SharedEndpoint)));
        assert!(matches!(replace_edges_by_gadget(&g, (0, 1), (0, 3), &gad), Err(Error::MissingEdge(0, 3))));
    }

    #[test]
    fn json_round_trip() {
        let g = is_crossover_gadget();
        assert_eq!(CrossoverGadget::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn bad_terminals_are_rejected() {
        let h = Graph::path(4);
        assert!(CrossoverGadget::new(Problem::Ds, h.clone(), [0, 0, 1, 2], LinearLayout::identity(4), 1).is_err());
        assert!(CrossoverGadget::new(Problem::Ds, h, [0, 1, 2, 9], LinearLayout::identity(4), 1).is_err());
    }
}
