//! Exact cutwidth by dynamic programming over vertex subsets.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::layout::LinearLayout;

pub const DEFAULT_ORACLE_LIMIT: usize = 18;

/// Exact cutwidth with the default vertex limit.
pub fn exact_cutwidth(g: &Graph) -> Result<(usize, LinearLayout)> {
    exact_cutwidth_with_limit(g, DEFAULT_ORACLE_LIMIT)
}

/// `best[S]` is the smallest possible maximum cut over all orderings of the
/// placed set `S` (including the cut right after `S` itself). The answer is
/// `best[V]`; a witnessing layout is recovered by walking the table backwards.
pub fn exact_cutwidth_with_limit(g: &Graph, limit: usize) -> Result<(usize, LinearLayout)> {
    let n = g.vertex_count();
    if n > limit || n > 30 {
        return Err(Error::OracleLimit { n, limit: limit.min(30) });
    }
    if n == 0 {
        return Ok((0, LinearLayout::identity(0)));
    }
    let masks: Vec<u32> = g
        .neighbor_masks()
        .into_iter()
        .map(|m| m as u32)
        .collect();
    let full = (1u32 << n) - 1;
    let size = 1usize << n;
    let mut cut = vec![0u16; size];
    let mut best = vec![u16::MAX; size];
    best[0] = 0;
    for s in 1..size as u32 {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        let inside = (masks[low] & rest).count_ones() as i32;
        cut[s as usize] = (cut[rest as usize] as i32 + g.degree(low) as i32 - 2 * inside) as u16;
        let mut bits = s;
        let mut m = u16::MAX;
        while bits != 0 {
            let v = bits.trailing_zeros();
            bits &= bits - 1;
            m = m.min(best[(s & !(1 << v)) as usize]);
        }
        best[s as usize] = m.max(cut[s as usize]);
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let target = best[s as usize];
        let mut bits = s;
        let v = loop {
            let v = bits.trailing_zeros();
            bits &= bits - 1;
            let prev = s & !(1 << v);
            if best[prev as usize].max(cut[s as usize]) <= target {
                break v;
            }
        };
        order.push(v as usize);
        s &= !(1 << v);
    }
    order.reverse();
    Ok((best[full as usize] as usize, LinearLayout::new(order)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::cut_profile;

    fn check(g: &Graph, want: usize) {
        let (w, layout) = exact_cutwidth(g).unwrap();
        assert_eq!(w, want);
        assert_eq!(cut_profile(g, &layout).unwrap().max_width, want);
    }

    #[test]
    fn small_families() {
        check(&Graph::path(5), 1);
        check(&Graph::complete(4), 4);
        check(&Graph::empty(6), 0);
        check(&Graph::cycle(6), 2);
        check(&Graph::empty(0), 0);
        check(&Graph::empty(1), 0);
    }

    #[test]
    fn limit_is_enforced() {
        let g = Graph::path(19);
        assert!(matches!(exact_cutwidth(&g), Err(Error::OracleLimit { .. })));
        assert_eq!(exact_cutwidth_with_limit(&g, 19).unwrap().0, 1);
    }
}
