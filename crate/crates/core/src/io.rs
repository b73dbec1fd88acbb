//! Text, JSON and DOT formats. All external formats use 1-based vertex ids.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::layout::LinearLayout;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_id(tok: Option<&str>, line: usize, n: usize) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, "missing vertex id"))?;
    let id: usize = tok.parse().map_err(|_| parse_err(line, format!("bad vertex id `{tok}`")))?;
    if id == 0 || id > n {
        return Err(parse_err(line, format!("vertex id {id} outside 1..={n}")));
    }
    Ok(id - 1)
}

/// Reads `p <n> <m>` followed by `e <u> <v>` lines; `c` lines are comments.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None => continue,
            Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line, "duplicate `p` line"));
                }
                let n = toks.next().and_then(|t| t.parse().ok()).ok_or_else(|| parse_err(line, "bad vertex count"))?;
                let m = toks.next().and_then(|t| t.parse().ok()).ok_or_else(|| parse_err(line, "bad edge count"))?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "trailing tokens"));
                }
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| parse_err(line, "`e` line before `p` line"))?;
                let u = parse_id(toks.next(), line, n)?;
                let v = parse_id(toks.next(), line, n)?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "trailing tokens"));
                }
                if u == v {
                    return Err(parse_err(line, "self-loop"));
                }
                edges.push((u, v, line));
            }
            Some(t) => return Err(parse_err(line, format!("unknown line type `{t}`"))),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing `p` line"))?;
    if edges.len() != m {
        return Err(parse_err(0, format!("header declares {m} edges but {} were given", edges.len())));
    }
    let mut seen = std::collections::BTreeSet::new();
    for &(u, v, line) in &edges {
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(line, "duplicate edge"));
        }
    }
    Graph::from_edges(n, edges.into_iter().map(|(u, v, _)| (u, v)))
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("p {} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(s, "e {} {}", e.0 + 1, e.1 + 1);
    }
    s
}

/// One line of whitespace-separated 1-based vertex ids in position order.
pub fn parse_layout(text: &str, n: usize) -> Result<LinearLayout> {
    let mut order = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.trim_start().starts_with('c') && raw.trim_start().chars().nth(1).is_none_or(char::is_whitespace) {
            continue;
        }
        for tok in raw.split_whitespace() {
            order.push(parse_id(Some(tok), line, n)?);
            last_line = line;
        }
    }
    if order.len() != n {
        return Err(parse_err(last_line, format!("layout lists {} vertices, graph has {n}", order.len())));
    }
    LinearLayout::new(order).map_err(|e| parse_err(last_line, e.to_string()))
}

pub fn write_layout(layout: &LinearLayout) -> String {
    let ids: Vec<String> = layout.order().iter().map(|v| (v + 1).to_string()).collect();
    ids.join(" ") + "\n"
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<usize, String>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> GraphJson {
        GraphJson {
            n: g.vertex_count(),
            edges: g.edges().iter().map(|e| [e.0 + 1, e.1 + 1]).collect(),
            labels: g.labels().iter().map(|(&k, v)| (k + 1, v.clone())).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let shift = |v: usize| {
            if v == 0 || v > self.n {
                Err(Error::InvalidGraph(format!("vertex id {v} outside 1..={}", self.n)))
            } else {
                Ok(v - 1)
            }
        };
        let edges = self.edges.iter().map(|&[a, b]| Ok((shift(a)?, shift(b)?))).collect::<Result<Vec<_>>>()?;
        let labels = self.labels.iter().map(|(&k, v)| Ok((shift(k)?, v.clone()))).collect::<Result<BTreeMap<_, _>>>()?;
        Graph::from_edges(self.n, edges)?.with_labels(labels)
    }
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string_pretty(&GraphJson::from_graph(g)).expect("plain data serializes")
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    serde_json::from_str::<GraphJson>(text)?.to_graph()
}

pub fn to_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        match g.label(v) {
            Some(l) => {
                let _ = writeln!(s, "  {} [label=\"{}\"];", v + 1, l.replace('\\', "\\\\").replace('"', "\\\""));
            }
            None => {
                let _ = writeln!(s, "  {};", v + 1);
            }
        }
    }
    for e in g.edges() {
        let _ = writeln!(s, "  {} -- {};", e.0 + 1, e.1 + 1);
    }
    s.push_str("}\n");
    s
}

/// Reads the DOT subset written by [`to_dot`]: numeric node statements with an
/// optional label and `a -- b;` edge statements.
pub fn parse_dot(text: &str) -> Result<Graph> {
    let mut nodes: BTreeMap<usize, Option<String>> = BTreeMap::new();
    let mut edges = Vec::new();
    let mut opened = false;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with("//") {
            continue;
        }
        if !opened {
            if t.starts_with("graph") && t.ends_with('{') {
                opened = true;
                continue;
            }
            return Err(parse_err(line, "expected `graph ... {`"));
        }
        if t == "}" {
            break;
        }
        let body = t.strip_suffix(';').unwrap_or(t).trim();
        let num = |tok: &str| -> Result<usize> {
            tok.trim().parse::<usize>().ok().filter(|&v| v > 0).ok_or_else(|| parse_err(line, format!("bad node id `{}`", tok.trim())))
        };
        if let Some((a, b)) = body.split_once("--") {
            let (a, b) = (num(a)?, num(b)?);
            nodes.entry(a).or_insert(None);
            nodes.entry(b).or_insert(None);
            edges.push((a - 1, b - 1));
        } else if let Some((id, attrs)) = body.split_once('[') {
            let id = num(id)?;
            let attrs = attrs.trim_end_matches(']');
            let label = attrs
                .strip_prefix("label=\"")
                .and_then(|r| r.strip_suffix('"'))
                .map(|l| l.replace("\\\"", "\"").replace("\\\\", "\\"));
            nodes.insert(id, label);
        } else {
            nodes.entry(num(body)?).or_insert(None);
        }
    }
    let n = nodes.keys().next_back().copied().unwrap_or(0);
    let labels = nodes.into_iter().filter_map(|(k, l)| l.map(|l| (k - 1, l))).collect();
    Graph::from_edges(n, edges)?.with_labels(labels)
}
