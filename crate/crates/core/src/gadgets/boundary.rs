//! Boundary functions of independent-set gadgets and the finite certificate
//! for their optimum shift.
//!
//! `h(F)` is the largest independent set of the gadget avoiding the terminal
//! subset `F`. Subsets are bitmasks over `[u, u', v, v']`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gadgets::{CrossoverGadget, Problem};
use crate::solvers::brute::max_independent_within;
use crate::solvers::{dp_is, heuristic_layout};

const BRUTE_SIZE: usize = 25;
const NAMES: [&str; 4] = ["u", "u'", "v", "v'"];
const PAIR_U: usize = 0b0011;
const PAIR_V: usize = 0b1100;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryFunction {
    pub values: [usize; 16],
}

impl BoundaryFunction {
    pub fn get(&self, subset: usize) -> usize {
        self.values[subset]
    }

    pub fn is_antitone(&self) -> bool {
        (0..16).all(|f| (0..4).all(|i| f & (1 << i) != 0 || self.values[f] >= self.values[f | (1 << i)]))
    }
}

pub fn subset_name(f: usize) -> String {
    let parts: Vec<&str> = (0..4).filter(|i| f & (1 << i) != 0).map(|i| NAMES[i]).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn is_boundary_function(gadget: &CrossoverGadget) -> Result<BoundaryFunction> {
    let h = &gadget.h;
    let n = h.vertex_count();
    let mut values = [0; 16];
    for (f, slot) in values.iter_mut().enumerate() {
        let banned: Vec<usize> = (0..4).filter(|i| f & (1 << i) != 0).map(|i| gadget.terminals[i]).collect();
        *slot = if n <= BRUTE_SIZE {
            let allowed = (0..n).filter(|v| !banned.contains(v)).fold(0u64, |m, v| m | (1 << v));
            max_independent_within(h, allowed)?
        } else {
            let keep: Vec<usize> = (0..n).filter(|v| !banned.contains(v)).collect();
            let sub = h.induced_subgraph(&keep);
            dp_is(&sub, &heuristic_layout(&sub))?.optimum
        };
    }
    Ok(BoundaryFunction { values })
}

/// Outcome of the three certificate conditions for shift `c`:
/// (C1) `h(F) = c` whenever `F` contains neither `{u, u'}` nor `{v, v'}`;
/// (C2) `h({u, u'}) <= c - 1` and `h({v, v'}) <= c - 1`;
/// (C3) `h({u, u', v, v'}) <= c - 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsCertificate {
    pub shift: i64,
    pub boundary: BoundaryFunction,
    /// Subsets violating (C1).
    pub c1_violations: Vec<usize>,
    pub c2: bool,
    pub c3: bool,
}

impl IsCertificate {
    pub fn c1(&self) -> bool {
        self.c1_violations.is_empty()
    }

    pub fn passes(&self) -> bool {
        self.c1() && self.c2 && self.c3
    }

    pub fn summary(&self) -> String {
        let mut s = String::new();
        let verdict = |b: bool| if b { "PASS" } else { "FAIL" };
        let _ = write!(s, "C1 {}", verdict(self.c1()));
        if let Some(&f) = self.c1_violations.first() {
            let _ = write!(s, " (h({}) = {} != {})", subset_name(f), self.boundary.get(f), self.shift);
        }
        let _ = write!(s, "; C2 {}; C3 {}", verdict(self.c2), verdict(self.c3));
        s
    }
}

pub fn certify_is_gadget_report(gadget: &CrossoverGadget) -> Result<IsCertificate> {
    if gadget.problem != Problem::Is {
        return Err(Error::Precondition("boundary certificates apply to independent-set gadgets".into()));
    }
    let boundary = is_boundary_function(gadget)?;
    let c = gadget.shift;
    let h = |f: usize| boundary.get(f) as i64;
    let c1_violations =
        (0..16).filter(|&f| f & PAIR_U != PAIR_U && f & PAIR_V != PAIR_V && h(f) != c).collect();
    let c2 = h(PAIR_U) < c && h(PAIR_V) < c;
    let c3 = h(PAIR_U | PAIR_V) <= c - 2;
    Ok(IsCertificate { shift: c, boundary, c1_violations, c2, c3 })
}

pub fn certify_is_gadget(gadget: &CrossoverGadget) -> Result<bool> {
    Ok(certify_is_gadget_report(gadget)?.passes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::is_crossover_gadget;
    use crate::graph::Graph;
    use crate::layout::LinearLayout;

    fn gadget(h: Graph, terminals: [usize; 4], shift: i64) -> CrossoverGadget {
        let n = h.vertex_count();
        CrossoverGadget::new(Problem::Is, h, terminals, LinearLayout::identity(n), shift).unwrap()
    }

    #[test]
    fn four_cycle_boundary() {
        // cycle u - v - u' - v'
        let h = Graph::cycle(4);
        let bf = is_boundary_function(&gadget(h, [0, 2, 1, 3], 2)).unwrap();
        assert_eq!(bf.get(0), 2);
        assert_eq!(bf.get(PAIR_U), 2);
        assert_eq!(bf.get(0b1111), 0);
        assert!(bf.is_antitone());
    }

    #[test]
    fn edgeless_gadget_fails_c1() {
        let g = gadget(Graph::empty(4), [0, 1, 2, 3], 4);
        let bf = is_boundary_function(&g).unwrap();
        for f in 0..16usize {
            assert_eq!(bf.get(f), 4 - f.count_ones() as usize);
        }
        let cert = certify_is_gadget_report(&g).unwrap();
        assert!(!cert.passes());
        assert!(cert.c1_violations.contains(&0b0101));
        assert!(cert.c2);
    }

    #[test]
    fn crossover_gadget_is_certified() {
        let g = is_crossover_gadget();
        let bf = is_boundary_function(&g).unwrap();
        assert_eq!(bf.get(0), 9);
        assert!(certify_is_gadget(&g).unwrap());
    }
}
