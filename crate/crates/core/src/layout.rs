//! Linear layouts, their cut profiles, and the path decompositions they induce.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A bijection between the vertices `0..n` and positions `0..n`.
///
/// Positions are 0-based internally; file formats use 1-based ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearLayout {
    order: Vec<usize>,
    pos: Vec<usize>,
}

impl LinearLayout {
    pub fn new(order: Vec<usize>) -> Result<LinearLayout> {
        let n = order.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidLayout(format!("vertex {v} out of range for {n} positions")));
            }
            if pos[v] != usize::MAX {
                return Err(Error::InvalidLayout(format!("vertex {v} appears twice")));
            }
            pos[v] = i;
        }
        Ok(LinearLayout { order, pos })
    }

    pub fn identity(n: usize) -> LinearLayout {
        LinearLayout { order: (0..n).collect(), pos: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Vertices in position order.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    pub fn vertex_at(&self, i: usize) -> usize {
        self.order[i]
    }

    pub fn check_for(&self, g: &Graph) -> Result<()> {
        if self.len() != g.vertex_count() {
            return Err(Error::InvalidLayout(format!(
                "layout has {} positions but the graph has {} vertices",
                self.len(),
                g.vertex_count()
            )));
        }
        Ok(())
    }

    /// The same order after renaming vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> LinearLayout {
        LinearLayout::new(self.order.iter().map(|&v| perm[v]).collect()).expect("perm is a bijection")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutProfile {
    /// `widths[i]` counts edges with one endpoint at position `<= i` and the other after it.
    pub widths: Vec<usize>,
    pub max_width: usize,
}

pub fn cut_profile(g: &Graph, layout: &LinearLayout) -> Result<CutProfile> {
    layout.check_for(g)?;
    let n = g.vertex_count();
    if n <= 1 {
        return Ok(CutProfile { widths: Vec::new(), max_width: 0 });
    }
    let mut diff = vec![0i64; n];
    for e in g.edges() {
        let (a, b) = order_pair(layout.position(e.0), layout.position(e.1));
        diff[a] += 1;
        diff[b] -= 1;
    }
    let mut widths = Vec::with_capacity(n - 1);
    let mut running = 0i64;
    for d in &diff[..n - 1] {
        running += d;
        widths.push(running as usize);
    }
    let max_width = widths.iter().copied().max().unwrap_or(0);
    Ok(CutProfile { widths, max_width })
}

fn order_pair(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathDecomposition {
    pub bags: Vec<Vec<usize>>,
    pub width: usize,
}

impl PathDecomposition {
    pub fn new(bags: Vec<Vec<usize>>) -> PathDecomposition {
        let width = bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1);
        PathDecomposition { bags, width }
    }

    /// Checks vertex coverage, edge coverage and contiguity of every vertex's bags.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.vertex_count();
        let mut first = vec![usize::MAX; n];
        let mut last = vec![0usize; n];
        let mut count = vec![0usize; n];
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if v >= n {
                    return Err(Error::Verification(format!("bag {i} holds unknown vertex {v}")));
                }
                first[v] = first[v].min(i);
                last[v] = i;
                count[v] += 1;
            }
        }
        for v in 0..n {
            if count[v] == 0 {
                return Err(Error::Verification(format!("vertex {v} is in no bag")));
            }
            if last[v] - first[v] + 1 != count[v] {
                return Err(Error::Verification(format!("bags of vertex {v} are not contiguous")));
            }
        }
        for e in g.edges() {
            let lo = first[e.0].max(first[e.1]);
            let hi = last[e.0].min(last[e.1]);
            if lo > hi {
                return Err(Error::Verification(format!("edge {{{}, {}}} is in no bag", e.0, e.1)));
            }
        }
        Ok(())
    }
}

/// Bag `i` holds the vertex at position `i` plus every earlier vertex that
/// still has a neighbor at position `i` or later. Its width never exceeds the
/// layout's cutwidth.
pub fn layout_to_path_decomposition(g: &Graph, layout: &LinearLayout) -> Result<PathDecomposition> {
    layout.check_for(g)?;
    let n = g.vertex_count();
    // last position among each vertex's neighbors
    let reach: Vec<usize> = (0..n)
        .map(|v| g.neighbors(v).iter().map(|&w| layout.position(w)).max().unwrap_or(0))
        .collect();
    let mut bags = Vec::with_capacity(n);
    let mut active: Vec<usize> = Vec::new();
    for i in 0..n {
        let v = layout.vertex_at(i);
        active.retain(|&u| reach[u] >= i);
        let mut bag = active.clone();
        bag.push(v);
        bags.push(bag);
        if reach[v] > i {
            active.push(v);
        }
    }
    Ok(PathDecomposition::new(bags))
}
