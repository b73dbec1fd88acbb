//! Simple undirected graphs with dense `0..n` vertex ids and optional labels.
//!
//! A [`Graph`] is immutable once built. Constructions that grow or rewire a
//! graph go through [`GraphBuilder`], which also handles vertex deletion by
//! compacting ids on `build`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Undirected edge stored with `0 < 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Edge {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    pub fn shares_endpoint(&self, other: &Edge) -> bool {
        self.contains(other.0) || self.contains(other.1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<Edge>,
    labels: BTreeMap<usize, String>,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph { n, adj: vec![Vec::new(); n], edges: Vec::new(), labels: BTreeMap::new() }
    }

    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{a}, {b}}} has an endpoint outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            if !set.insert(Edge::new(a, b)) {
                return Err(Error::InvalidGraph(format!("duplicate edge {{{a}, {b}}}")));
            }
        }
        Ok(Graph::from_edge_set(n, set, BTreeMap::new()))
    }

    fn from_edge_set(n: usize, edges: BTreeSet<Edge>, labels: BTreeMap<usize, String>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.0].push(e.1);
            adj[e.1].push(e.0);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, adj, edges: edges.into_iter().collect(), labels }
    }

    pub fn with_labels(mut self, labels: BTreeMap<usize, String>) -> Result<Graph> {
        if let Some((&v, _)) = labels.iter().find(|(&v, _)| v >= self.n) {
            return Err(Error::InvalidGraph(format!("label for missing vertex {v}")));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    /// First vertex carrying exactly this label.
    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().find(|(_, l)| l.as_str() == label).map(|(&v, _)| v)
    }

    /// Open-neighborhood bitmasks; only valid for graphs with at most 64 vertices.
    pub fn neighbor_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask view needs at most 64 vertices");
        self.adj.iter().map(|ns| ns.iter().fold(0u64, |m, &w| m | (1 << w))).collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Subgraph induced by `keep`, with vertices renumbered in the given order.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let mut map = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            map[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| map[e.0] != usize::MAX && map[e.1] != usize::MAX)
            .map(|e| Edge::new(map[e.0], map[e.1]))
            .collect();
        let labels = self
            .labels
            .iter()
            .filter(|(&v, _)| map[v] != usize::MAX)
            .map(|(&v, l)| (map[v], l.clone()))
            .collect();
        Graph::from_edge_set(keep.len(), edges, labels)
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges = self.edges.iter().map(|e| Edge::new(perm[e.0], perm[e.1])).collect();
        let labels = self.labels.iter().map(|(&v, l)| (perm[v], l.clone())).collect();
        Graph::from_edge_set(self.n, edges, labels)
    }

    pub fn to_builder(&self) -> GraphBuilder {
        GraphBuilder {
            n: self.n,
            edges: self.edges.iter().copied().collect(),
            labels: self.labels.clone(),
            deleted: BTreeSet::new(),
        }
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
            .expect("clique edges are valid")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
            .expect("biclique edges are valid")
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star edges are valid")
    }
}

/// Mutable staging area for graph constructions.
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    n: usize,
    edges: BTreeSet<Edge>,
    labels: BTreeMap<usize, String>,
    deleted: BTreeSet<usize>,
}

impl GraphBuilder {
    pub fn new() -> GraphBuilder {
        GraphBuilder::default()
    }

    pub fn with_vertices(n: usize) -> GraphBuilder {
        GraphBuilder { n, ..GraphBuilder::default() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n - self.deleted.len()
    }

    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    pub fn add_labeled_vertex(&mut self, label: impl Into<String>) -> usize {
        let v = self.add_vertex();
        self.labels.insert(v, label.into());
        v
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) {
        self.labels.insert(v, label.into());
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    fn check_live(&self, v: usize) -> Result<()> {
        if v >= self.n || self.deleted.contains(&v) {
            return Err(Error::InvalidGraph(format!("vertex {v} does not exist")));
        }
        Ok(())
    }

    /// Adds `{a, b}`; returns false if it was already present.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<bool> {
        self.check_live(a)?;
        self.check_live(b)?;
        if a == b {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
        }
        Ok(self.edges.insert(Edge::new(a, b)))
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) -> bool {
        self.edges.remove(&Edge::new(a, b))
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&Edge::new(a, b))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|e| e.contains(v))
            .map(|e| if e.0 == v { e.1 } else { e.0 })
            .collect()
    }

    /// Marks `v` deleted together with its incident edges; ids are compacted on build.
    pub fn remove_vertex(&mut self, v: usize) -> Result<()> {
        self.check_live(v)?;
        self.edges.retain(|e| !e.contains(v));
        self.labels.remove(&v);
        self.deleted.insert(v);
        Ok(())
    }

    /// Copies `h` in and returns the id of each of its vertices. Labels are
    /// prefixed with `tag` when given.
    pub fn add_graph(&mut self, h: &Graph, tag: Option<&str>) -> Vec<usize> {
        let base = self.n;
        self.n += h.vertex_count();
        for e in h.edges() {
            self.edges.insert(Edge(base + e.0, base + e.1));
        }
        for v in 0..h.vertex_count() {
            let role = h.label(v).map(str::to_string).unwrap_or_else(|| v.to_string());
            if let Some(tag) = tag {
                self.labels.insert(base + v, format!("{tag}:{role}"));
            } else if let Some(l) = h.label(v) {
                self.labels.insert(base + v, l.to_string());
            }
        }
        (base..base + h.vertex_count()).collect()
    }

    pub fn build(self) -> Graph {
        self.build_with_map().0
    }

    /// Builds the graph and returns, for every staged id, its final id (None if deleted).
    pub fn build_with_map(self) -> (Graph, Vec<Option<usize>>) {
        let mut map = vec![None; self.n];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !self.deleted.contains(&v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(map[e.0].unwrap(), map[e.1].unwrap()))
            .collect();
        let labels = self
            .labels
            .into_iter()
            .filter_map(|(v, l)| map[v].map(|w| (w, l)))
            .collect();
        (Graph::from_edge_set(next, edges, labels), map)
    }
}

/// Replaces `u` and `v` by a single vertex adjacent to `N({u, v})`.
///
/// The merged vertex takes the smaller of the two ids (later ids shift down by
/// one) and keeps that vertex's label. Parallel edges collapse and the edge
/// `{u, v}`, if present, disappears.
pub fn identify_vertices(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    if u >= g.vertex_count() || v >= g.vertex_count() {
        return Err(Error::InvalidGraph(format!("vertex {} does not exist", u.max(v))));
    }
    if u == v {
        return Err(Error::Precondition("cannot identify a vertex with itself".into()));
    }
    let (keep, gone) = (u.min(v), u.max(v));
    let mut b = g.to_builder();
    for w in g.neighbors(gone).to_vec() {
        if w != keep {
            b.add_edge(keep, w)?;
        }
    }
    if b.label(keep).is_none() {
        if let Some(l) = g.label(gone) {
            b.set_label(keep, l);
        }
    }
    b.remove_vertex(gone)?;
    Ok(b.build())
}
