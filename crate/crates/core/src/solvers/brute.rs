//! Exhaustive optimum oracles for small graphs.
//!
//! Each problem uses its own search so that the three oracles can cross-check
//! one another: independent set by include/exclude branching, vertex cover by
//! branching on an uncovered edge, dominating set by branching on the first
//! undominated vertex under iterative deepening.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_BRUTE_LIMIT: usize = 24;
const HARD_LIMIT: usize = 64;

fn gate(g: &Graph, limit: usize) -> Result<Vec<u64>> {
    let n = g.vertex_count();
    if n > limit.min(HARD_LIMIT) {
        return Err(Error::OracleLimit { n, limit: limit.min(HARD_LIMIT) });
    }
    Ok(g.neighbor_masks())
}

fn all_bits(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn brute_is(g: &Graph) -> Result<usize> {
    brute_is_with_limit(g, DEFAULT_BRUTE_LIMIT)
}

pub fn brute_is_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    let nbrs = gate(g, limit)?;
    let mut best = 0;
    mis_branch(&nbrs, all_bits(g.vertex_count()), 0, &mut best);
    Ok(best)
}

/// Maximum independent set among the vertices of `allowed`.
pub fn max_independent_within(g: &Graph, allowed: u64) -> Result<usize> {
    let nbrs = gate(g, HARD_LIMIT)?;
    let mut best = 0;
    mis_branch(&nbrs, allowed & all_bits(g.vertex_count()), 0, &mut best);
    Ok(best)
}

fn mis_branch(nbrs: &[u64], cand: u64, size: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    // branch on the candidate with the most candidate neighbors
    let mut pick = cand.trailing_zeros() as usize;
    let mut pick_deg = 0;
    let mut bits = cand;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let d = (nbrs[v] & cand).count_ones();
        if d == 0 {
            // isolated within the candidates: always take it
            mis_branch(nbrs, cand & !(1 << v), size + 1, best);
            return;
        }
        if d > pick_deg {
            pick = v;
            pick_deg = d;
        }
    }
    mis_branch(nbrs, cand & !(1 << pick) & !nbrs[pick], size + 1, best);
    mis_branch(nbrs, cand & !(1 << pick), size, best);
}

pub fn brute_vc(g: &Graph) -> Result<usize> {
    brute_vc_with_limit(g, DEFAULT_BRUTE_LIMIT)
}

pub fn brute_vc_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    gate(g, limit)?;
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.0, e.1)).collect();
    for k in 0..=g.vertex_count() {
        if vc_branch(&edges, 0, k) {
            return Ok(k);
        }
    }
    unreachable!("the full vertex set is always a cover")
}

fn vc_branch(edges: &[(usize, usize)], chosen: u64, budget: usize) -> bool {
    let open = edges.iter().find(|&&(a, b)| chosen & (1 << a) == 0 && chosen & (1 << b) == 0);
    match open {
        None => true,
        Some(_) if budget == 0 => false,
        Some(&(a, b)) => {
            vc_branch(edges, chosen | (1 << a), budget - 1)
                || vc_branch(edges, chosen | (1 << b), budget - 1)
        }
    }
}

pub fn brute_ds(g: &Graph) -> Result<usize> {
    brute_ds_with_limit(g, DEFAULT_BRUTE_LIMIT)
}

pub fn brute_ds_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    gate(g, limit)?;
    Ok(min_dominating_with(g, all_bits(g.vertex_count()), |_| true)?.expect("V dominates itself"))
}

/// Smallest `k` such that some dominating set of size `k` drawn from `allowed`
/// satisfies `accept`, considering only dominating sets of the minimum size
/// attainable from `allowed`. Returns `None` when `allowed` cannot dominate the
/// graph or no minimum-size set is accepted.
pub fn min_dominating_with<F>(g: &Graph, allowed: u64, mut accept: F) -> Result<Option<usize>>
where
    F: FnMut(u64) -> bool,
{
    let nbrs = gate(g, HARD_LIMIT)?;
    let n = g.vertex_count();
    let closed: Vec<u64> = (0..n).map(|v| nbrs[v] | (1 << v)).collect();
    let full = all_bits(n);
    if closed.iter().any(|&c| c & allowed == 0) {
        return Ok(None);
    }
    for k in 0..=n {
        let mut found_any = false;
        let mut accepted = false;
        ds_branch(&closed, allowed, full, 0, 0, k, &mut |set| {
            found_any = true;
            if accept(set) {
                accepted = true;
                return true;
            }
            false
        });
        if accepted {
            return Ok(Some(k));
        }
        if found_any {
            return Ok(None);
        }
    }
    Ok(None)
}

/// Enumerates dominating sets of size at most `budget` reachable by always
/// covering the lowest undominated vertex. At the minimum size every minimum
/// dominating set is reached. `visit` returns true to stop early.
fn ds_branch<F>(
    closed: &[u64],
    allowed: u64,
    full: u64,
    chosen: u64,
    dominated: u64,
    budget: usize,
    visit: &mut F,
) -> bool
where
    F: FnMut(u64) -> bool,
{
    let open = full & !dominated;
    if open == 0 {
        return visit(chosen);
    }
    if budget == 0 {
        return false;
    }
    let v = open.trailing_zeros() as usize;
    let mut options = closed[v] & allowed & !chosen;
    while options != 0 {
        let w = options.trailing_zeros() as usize;
        options &= options - 1;
        if ds_branch(closed, allowed, full, chosen | (1 << w), dominated | closed[w], budget - 1, visit) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c5_values() {
        let g = Graph::cycle(5);
        assert_eq!(brute_is(&g).unwrap(), 2);
        assert_eq!(brute_ds(&g).unwrap(), 2);
        assert_eq!(brute_vc(&g).unwrap(), 3);
    }

    #[test]
    fn clique_values() {
        for n in 1..8 {
            let g = Graph::complete(n);
            assert_eq!(brute_vc(&g).unwrap(), n - 1);
            assert_eq!(brute_is(&g).unwrap(), 1);
            assert_eq!(brute_ds(&g).unwrap(), 1);
        }
    }

    #[test]
    fn isolated_vertices_dominate_themselves() {
        assert_eq!(brute_ds(&Graph::empty(4)).unwrap(), 4);
        assert_eq!(brute_ds(&Graph::empty(0)).unwrap(), 0);
        assert_eq!(brute_is(&Graph::empty(0)).unwrap(), 0);
    }

    #[test]
    fn size_limit() {
        let g = Graph::path(25);
        assert!(matches!(brute_is(&g), Err(Error::OracleLimit { .. })));
        assert!(matches!(brute_ds(&g), Err(Error::OracleLimit { .. })));
        assert_eq!(brute_ds_with_limit(&g, 30).unwrap(), 9);
    }

    #[test]
    fn restricted_domination() {
        // star: the center is the only size-1 dominating set
        let g = Graph::star(4);
        assert_eq!(min_dominating_with(&g, u64::MAX, |_| true).unwrap(), Some(1));
        assert_eq!(min_dominating_with(&g, !1, |_| true).unwrap(), Some(4));
        assert_eq!(min_dominating_with(&g, u64::MAX, |s| s != 1).unwrap(), None);
    }
}
