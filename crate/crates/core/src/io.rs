//! File formats: clutter JSON, graph JSON and the line-based graph text
//! format, plus the JSON shape of hardness reports.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::clutter::{Clutter, ClutterError};
use crate::graph::{Graph, GraphError};
use crate::hardness::{EdgeHardness, HardnessReport};
use crate::rational::Rational;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("invalid JSON input: {0}")]
    Json(#[from] serde_json::Error),
    #[error("line {line}: {msg}")]
    Text { line: usize, msg: String },
    #[error(transparent)]
    Clutter(#[from] ClutterError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn parse_clutter(text: &str) -> Result<Clutter, ParseError> {
    Ok(serde_json::from_str(text)?)
}

/// Reads a graph in either JSON or text form, chosen by the first
/// non-blank character.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    if text.trim_start().starts_with('{') {
        Ok(serde_json::from_str(text)?)
    } else {
        parse_graph_text(text)
    }
}

/// Text form: `p <n> <m>` followed by `m` lines `e <u> <v>`. Blank lines
/// and lines starting with `c` are ignored.
///
/// Endpoints are 0-based ids when every endpoint is an integer below `n`;
/// otherwise they are labels, numbered in order of first appearance. In
/// label mode, vertices never named in an edge get their id as label.
pub fn parse_graph_text(text: &str) -> Result<Graph, ParseError> {
    let err = |line: usize, msg: String| ParseError::Text { line, msg };
    let mut header: Option<(usize, usize)> = None;
    let mut pairs: Vec<(usize, String, String)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut tok = raw.split_whitespace();
        match tok.next() {
            None => continue,
            Some(t) if t.starts_with('c') => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(err(line, "second 'p' line".into()));
                }
                let nums: Vec<&str> = tok.collect();
                let parsed: Option<Vec<usize>> = nums.iter().map(|s| s.parse().ok()).collect();
                match parsed.as_deref() {
                    Some(&[n, m]) => header = Some((n, m)),
                    _ => return Err(err(line, "expected 'p <n> <m>'".into())),
                }
            }
            Some("e") => {
                if header.is_none() {
                    return Err(err(line, "edge before 'p' line".into()));
                }
                let ends: Vec<&str> = tok.collect();
                match ends.as_slice() {
                    [u, v] => pairs.push((line, u.to_string(), v.to_string())),
                    _ => return Err(err(line, "expected 'e <u> <v>'".into())),
                }
            }
            Some(other) => return Err(err(line, format!("unknown line type {other:?}"))),
        }
    }
    let (n, m) = header.ok_or_else(|| err(0, "missing 'p <n> <m>' line".into()))?;
    if pairs.len() != m {
        return Err(err(
            0,
            format!("header announces {m} edges, found {}", pairs.len()),
        ));
    }
    let numeric = pairs.iter().all(|(_, u, v)| {
        [u, v]
            .iter()
            .all(|s| s.parse::<usize>().is_ok_and(|x| x < n))
    });
    let mut g = if numeric {
        Graph::empty(n)
    } else {
        let mut labels: Vec<String> = Vec::new();
        let mut seen: HashMap<&str, ()> = HashMap::new();
        for (_, u, v) in &pairs {
            for s in [u, v] {
                if seen.insert(s.as_str(), ()).is_none() {
                    labels.push(s.clone());
                }
            }
        }
        if labels.len() > n {
            return Err(err(
                0,
                format!("{} distinct labels for {n} vertices", labels.len()),
            ));
        }
        for id in labels.len()..n {
            labels.push(id.to_string());
        }
        Graph::with_labels(labels)?
    };
    let index: HashMap<String, usize> = g
        .labels()
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), i))
        .collect();
    for (line, u, v) in &pairs {
        let (a, b) = if numeric {
            (u.parse().unwrap(), v.parse().unwrap())
        } else {
            (index[u.as_str()], index[v.as_str()])
        };
        g.add_edge(a, b).map_err(|e| err(*line, e.to_string()))?;
    }
    Ok(g)
}

/// Text form using vertex labels as endpoints.
pub fn graph_to_text(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("p {} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("e {} {}\n", g.label(u), g.label(v)));
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeReportJson {
    pub index: usize,
    pub c: Rational,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct HardnessReportJson {
    pub overall: Rational,
    pub argmax_edge: Option<usize>,
    pub edges: Vec<EdgeReportJson>,
}

/// One edge's entry with witness members as labels in id order.
pub fn edge_report_json(c: &Clutter, h: &EdgeHardness, with_witness: bool) -> EdgeReportJson {
    EdgeReportJson {
        index: h.witness.edge_index,
        c: h.c,
        witness: with_witness.then(|| c.edge_labels(&h.witness.subset)),
    }
}

pub fn hardness_report_json(
    c: &Clutter,
    r: &HardnessReport,
    with_witness: bool,
) -> HardnessReportJson {
    HardnessReportJson {
        overall: r.overall,
        argmax_edge: r.argmax_edge,
        edges: r
            .per_edge
            .iter()
            .map(|h| edge_report_json(c, h, with_witness))
            .collect(),
    }
}
