//! Greedy layout construction followed by local 2-opt refinement.

use crate::graph::Graph;
use crate::layout::LinearLayout;

const MAX_STARTS: usize = 8;
const WINDOW: usize = 24;
const MAX_PASSES: usize = 20;
const REFINE_LIMIT: usize = 3000;

/// Simplicial degree-two vertices are set aside, the rest is laid out greedily
/// and refined, and each set-aside vertex is then placed right after its later
/// neighbor.
pub fn heuristic_layout(g: &Graph) -> LinearLayout {
    let n = g.vertex_count();
    let ears = ears(g);
    if ears.is_empty() {
        return LinearLayout::new(core_order(g)).expect("greedy emits a permutation");
    }
    let is_ear: Vec<bool> = (0..n).map(|v| ears.contains(&v)).collect();
    let core: Vec<usize> = (0..n).filter(|&v| !is_ear[v]).collect();
    let sub = g.induced_subgraph(&core);
    let mut after: Vec<Vec<usize>> = vec![Vec::new(); n];
    let core_pos: Vec<usize> = {
        let mut p = vec![0; n];
        for (i, &v) in core_order(&sub).iter().enumerate() {
            p[core[v]] = i;
        }
        p
    };
    for &w in &ears {
        let last = *g.neighbors(w).iter().max_by_key(|&&u| core_pos[u]).expect("ears have two neighbors");
        after[last].push(w);
    }
    let mut by_pos: Vec<usize> = core.clone();
    by_pos.sort_by_key(|&v| core_pos[v]);
    let mut order = Vec::with_capacity(n);
    for v in by_pos {
        order.push(v);
        order.extend(after[v].iter().copied());
    }
    LinearLayout::new(order).expect("every vertex placed once")
}

/// A maximal independent set of simplicial degree-two vertices.
fn ears(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut chosen = vec![false; n];
    let mut out = Vec::new();
    for v in 0..n {
        let nb = g.neighbors(v);
        if nb.len() == 2 && g.has_edge(nb[0], nb[1]) && !chosen[nb[0]] && !chosen[nb[1]] {
            chosen[v] = true;
            out.push(v);
        }
    }
    out
}

fn core_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by_key(|&v| (g.degree(v), v));
    let tries = if n > 1000 { 1 } else { MAX_STARTS.min(n) };

    let mut best: Option<(Score, Vec<usize>)> = None;
    for &s in &starts[..tries] {
        let mut order = greedy_from(g, s);
        if n <= REFINE_LIMIT {
            refine(g, &mut order);
        }
        let sc = score(g, &order);
        if best.as_ref().is_none_or(|(b, _)| sc < *b) {
            best = Some((sc, order));
        }
    }
    best.expect("at least one start").1
}

/// Repeatedly places the unplaced vertex whose addition changes the current
/// cut the least, preferring vertices with more placed neighbors.
fn greedy_from(g: &Graph, start: usize) -> Vec<usize> {
    let n = g.vertex_count();
    let mut placed = vec![false; n];
    let mut placed_nbrs = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    let mut next = start;
    loop {
        placed[next] = true;
        order.push(next);
        for &w in g.neighbors(next) {
            placed_nbrs[w] += 1;
        }
        if order.len() == n {
            break;
        }
        next = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| {
                let delta = g.degree(v) as i64 - 2 * placed_nbrs[v] as i64;
                (delta, std::cmp::Reverse(placed_nbrs[v]), v)
            })
            .expect("unplaced vertex remains");
    }
    order
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct Score {
    max: usize,
    squares: usize,
}

fn score(g: &Graph, order: &[usize]) -> Score {
    let n = order.len();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut diff = vec![0i64; n + 1];
    for e in g.edges() {
        let (a, b) = if pos[e.0] < pos[e.1] { (pos[e.0], pos[e.1]) } else { (pos[e.1], pos[e.0]) };
        diff[a] += 1;
        diff[b] -= 1;
    }
    let mut run = 0i64;
    let mut max = 0;
    let mut squares = 0;
    for d in &diff[..n.saturating_sub(1)] {
        run += d;
        let w = run as usize;
        max = max.max(w);
        squares += w * w;
    }
    Score { max, squares }
}

/// First-improvement search over segment reversals and swaps within a window.
fn refine(g: &Graph, order: &mut [usize]) {
    let n = order.len();
    let mut current = score(g, order);
    for _ in 0..MAX_PASSES {
        let mut improved = false;
        for i in 0..n {
            for j in i + 1..n.min(i + WINDOW + 1) {
                order[i..=j].reverse();
                let s = score(g, order);
                if s < current {
                    current = s;
                    improved = true;
                    continue;
                }
                order[i..=j].reverse();

                order.swap(i, j);
                let s = score(g, order);
                if s < current {
                    current = s;
                    improved = true;
                    continue;
                }
                order.swap(i, j);
            }
        }
        if !improved {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::cut_profile;

    #[test]
    fn paths_get_width_one() {
        for n in 2..=50 {
            let g = Graph::path(n);
            let l = heuristic_layout(&g);
            assert_eq!(cut_profile(&g, &l).unwrap().max_width, 1, "n = {n}");
        }
    }

    #[test]
    fn edgeless_width_zero() {
        let g = Graph::empty(7);
        assert_eq!(cut_profile(&g, &heuristic_layout(&g)).unwrap().max_width, 0);
    }
}
