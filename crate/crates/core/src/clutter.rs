//! Clutters (Sperner families): a labelled vertex universe plus an antichain
//! of nonempty vertex subsets.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::{EdgeSet, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClutterError {
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("edge refers to unknown vertex label {0:?}")]
    UnknownLabel(String),
    #[error("edge {0} is empty")]
    EmptyEdge(usize),
    #[error("edge {edge} contains vertex id {vertex}, outside the universe")]
    VertexOutOfRange { edge: usize, vertex: VertexId },
    #[error("edges {0} and {1} violate the antichain property (one contains the other)")]
    AntichainViolation(usize, usize),
    #[error("the clutter has no edges")]
    NoEdges,
    #[error("not a permutation of the vertex ids")]
    NotAPermutation,
}

/// A validated clutter. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ClutterJson", try_from = "ClutterJson")]
pub struct Clutter {
    labels: Vec<String>,
    edges: Vec<EdgeSet>,
}

impl Clutter {
    /// Builds a clutter from external labels. Edge order is preserved.
    pub fn build<S, E, L>(labels: &[S], edge_lists: E) -> Result<Self, ClutterError>
    where
        S: AsRef<str>,
        E: IntoIterator<Item = L>,
        L: IntoIterator,
        L::Item: AsRef<str>,
    {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_ref(), i).is_some() {
                return Err(ClutterError::DuplicateLabel(l.as_ref().to_owned()));
            }
        }
        let mut edges = Vec::new();
        for list in edge_lists {
            let mut e = EdgeSet::new();
            for l in list {
                let l = l.as_ref();
                match index.get(l) {
                    Some(&v) => {
                        e.insert(v);
                    }
                    None => return Err(ClutterError::UnknownLabel(l.to_owned())),
                }
            }
            edges.push(e);
        }
        Self::from_sets(
            labels.iter().map(|l| l.as_ref().to_owned()).collect(),
            edges,
        )
    }

    /// Builds a clutter from already-dense ids.
    pub fn from_sets(labels: Vec<String>, edges: Vec<EdgeSet>) -> Result<Self, ClutterError> {
        let mut seen = HashMap::with_capacity(labels.len());
        for l in &labels {
            if seen.insert(l.as_str(), ()).is_some() {
                return Err(ClutterError::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        for (i, e) in edges.iter().enumerate() {
            if e.is_empty() {
                return Err(ClutterError::EmptyEdge(i));
            }
            if e.bound() > n {
                return Err(ClutterError::VertexOutOfRange {
                    edge: i,
                    vertex: e.bound() - 1,
                });
            }
        }
        if let Some((i, j)) = first_comparable_pair(&edges) {
            return Err(ClutterError::AntichainViolation(i, j));
        }
        Ok(Self { labels, edges })
    }

    /// Clutter on `0..n` labelled by decimal ids.
    pub fn with_numeric_labels(n: usize, edges: Vec<EdgeSet>) -> Result<Self, ClutterError> {
        Self::from_sets((0..n).map(|v| v.to_string()).collect(), edges)
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn id_of(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn edges(&self) -> &[EdgeSet] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &EdgeSet {
        &self.edges[i]
    }

    pub fn edge_labels(&self, e: &EdgeSet) -> Vec<String> {
        e.iter().map(|v| self.labels[v].clone()).collect()
    }

    /// Union of all edges.
    pub fn support(&self) -> EdgeSet {
        let mut u = EdgeSet::new();
        for e in &self.edges {
            u.union_with(e);
        }
        u
    }

    /// Intersection of all edges; `None` when there are no edges.
    pub fn core(&self) -> Option<EdgeSet> {
        let (first, rest) = self.edges.split_first()?;
        let mut x = first.clone();
        for e in rest {
            x.intersect_with(e);
        }
        Some(x)
    }

    /// No vertex lies in every edge.
    pub fn check_c1(&self) -> Result<bool, ClutterError> {
        self.core()
            .map(|x| x.is_empty())
            .ok_or(ClutterError::NoEdges)
    }

    /// Every vertex lies in some edge.
    pub fn check_c2(&self) -> bool {
        self.support().len() == self.n()
    }

    /// Drops vertices that belong to no edge and re-densifies ids, keeping
    /// the relative order (and labels) of the survivors.
    pub fn remove_isolated(&self) -> Clutter {
        let support = self.support();
        let mut map = vec![usize::MAX; self.n()];
        let mut labels = Vec::with_capacity(support.len());
        for v in &support {
            map[v] = labels.len();
            labels.push(self.labels[v].clone());
        }
        Clutter {
            labels,
            edges: self.edges.iter().map(|e| e.map(&map)).collect(),
        }
    }

    /// Moves every vertex id `v` to `perm[v]`; labels stay attached to ids.
    pub fn relabel(&self, perm: &[VertexId]) -> Result<Clutter, ClutterError> {
        if perm.len() != self.n() {
            return Err(ClutterError::NotAPermutation);
        }
        let mut hit = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || std::mem::replace(&mut hit[p], true) {
                return Err(ClutterError::NotAPermutation);
            }
        }
        Ok(Clutter {
            labels: self.labels.clone(),
            edges: self.edges.iter().map(|e| e.map(perm)).collect(),
        })
    }

    /// Edges in canonical order (lexicographic by id sequence).
    pub fn sorted_edges(&self) -> Vec<EdgeSet> {
        let mut es = self.edges.clone();
        es.sort();
        es
    }

    /// True when both clutters have the same labels and the same edge set,
    /// ignoring edge order.
    pub fn same_edges(&self, other: &Clutter) -> bool {
        self.labels == other.labels && self.sorted_edges() == other.sorted_edges()
    }
}

/// `{"vertices": [...], "edges": [[...], ...]}`. Written with members in id
/// order and edges sorted lexicographically by id sequence; any order is
/// accepted on input.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClutterJson {
    pub vertices: Vec<String>,
    pub edges: Vec<Vec<String>>,
}

impl From<Clutter> for ClutterJson {
    fn from(c: Clutter) -> Self {
        let edges = c.sorted_edges().iter().map(|e| c.edge_labels(e)).collect();
        ClutterJson {
            vertices: c.labels,
            edges,
        }
    }
}

impl TryFrom<ClutterJson> for Clutter {
    type Error = ClutterError;

    fn try_from(j: ClutterJson) -> Result<Self, ClutterError> {
        Clutter::build(&j.vertices, j.edges)
    }
}

fn first_comparable_pair(edges: &[EdgeSet]) -> Option<(usize, usize)> {
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if edges[i].is_subset(&edges[j]) || edges[j].is_subset(&edges[i]) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Keeps the inclusion-maximal sets, collapsing duplicates onto their first
/// occurrence. Survivors keep their relative order.
pub fn normalize_antichain(sets: &[EdgeSet]) -> Vec<EdgeSet> {
    sets.iter()
        .enumerate()
        .filter(|&(i, s)| {
            !sets
                .iter()
                .enumerate()
                .any(|(j, t)| j != i && s.is_subset(t) && (s != t || j < i))
        })
        .map(|(_, s)| s.clone())
        .collect()
}
