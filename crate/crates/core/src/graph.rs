//! Simple undirected graphs and the clutters they induce: maximal independent
//! vertex sets and maximal matchings.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::{EdgeSet, VertexId};
use crate::clutter::{Clutter, ClutterError};

/// Default limit on the number of sets an enumeration may produce.
pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("edge {0}-{1} listed twice")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertex {vertex} outside 0..{n}")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),
    #[error("expected {expected} vertex labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error("the graph has no edges")]
    NoGraphEdges,
    #[error("enumeration exceeded the output cap of {0} sets")]
    OutputCapExceeded(usize),
    #[error(transparent)]
    Clutter(#[from] ClutterError),
}

/// Index into [`Graph::edges`].
pub type GraphEdgeId = usize;

/// Undirected graph without loops or parallel edges, stored as bit-vector
/// adjacency rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "GraphJson", try_from = "GraphJson")]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<EdgeSet>,
}

impl Graph {
    /// Edgeless graph on `0..n` with decimal labels.
    pub fn empty(n: usize) -> Self {
        Self {
            labels: (0..n).map(|v| v.to_string()).collect(),
            adj: vec![EdgeSet::new(); n],
        }
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Self, GraphError> {
        let mut seen = HashMap::new();
        for l in &labels {
            if seen.insert(l.as_str(), ()).is_some() {
                return Err(GraphError::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        Ok(Self {
            labels,
            adj: vec![EdgeSet::new(); n],
        })
    }

    /// Replaces the vertex labels; `labels` must have one distinct entry per
    /// vertex.
    pub fn relabelled(self, labels: Vec<String>) -> Result<Self, GraphError> {
        let fresh = Self::with_labels(labels)?;
        if fresh.n() != self.n() {
            return Err(GraphError::LabelCount {
                expected: self.n(),
                got: fresh.n(),
            });
        }
        Ok(Self {
            labels: fresh.labels,
            adj: self.adj,
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u].contains(v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn neighbors(&self, v: VertexId) -> &EdgeSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].contains(v)
    }

    /// Unordered adjacent pairs `(u, v)` with `u < v`, sorted. Position in
    /// this list is the pair's [`GraphEdgeId`].
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        (0..self.n())
            .flat_map(|u| {
                self.adj[u]
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(EdgeSet::len).sum::<usize>() / 2
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut row = EdgeSet::full(n);
                row.difference_with(&self.adj[v]);
                row.remove(v);
                row
            })
            .collect();
        Graph {
            labels: self.labels.clone(),
            adj,
        }
    }

    pub fn is_independent(&self, s: &EdgeSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// Independent, and every outside vertex has a neighbor inside.
    pub fn is_maximal_independent(&self, s: &EdgeSet) -> bool {
        self.is_independent(s) && (0..self.n()).all(|v| s.contains(v) || self.adj[v].intersects(s))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = EdgeSet::singleton(0);
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for v in &self.adj[u] {
                if seen.insert(v) {
                    queue.push_back(v);
                }
            }
        }
        seen.len() == n
    }

    /// True for K_1, K_{2,2}, K_{3,3} and K_{4,4}, the graphs excluded from
    /// the lower bound on the hardness of maximal-independent-set clutters.
    pub fn is_excluded_exception(&self) -> bool {
        match self.n() {
            1 => true,
            n @ (4 | 6 | 8) => self.is_balanced_complete_bipartite(n / 2),
            _ => false,
        }
    }

    fn is_balanced_complete_bipartite(&self, side: usize) -> bool {
        if (0..self.n()).any(|v| self.degree(v) != side) {
            return false;
        }
        let other = self.adj[0].clone();
        let mut own = EdgeSet::full(self.n());
        own.difference_with(&other);
        own.len() == side
            && self.is_independent(&own)
            && self.is_independent(&other)
            && own.iter().all(|u| other.is_subset(&self.adj[u]))
    }

    /// The line graph together with the input edge each of its vertices
    /// stands for.
    pub fn line_graph(&self) -> (Graph, Vec<(VertexId, VertexId)>) {
        let edges = self.edges();
        let labels = edges
            .iter()
            .map(|&(u, v)| format!("{}-{}", self.labels[u], self.labels[v]))
            .collect();
        let mut adj = vec![EdgeSet::new(); edges.len()];
        for (i, &(a, b)) in edges.iter().enumerate() {
            for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
                if a == c || a == d || b == c || b == d {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        (Graph { labels, adj }, edges)
    }

    /// All maximal independent sets, sorted lexicographically.
    ///
    /// Bron–Kerbosch with pivoting, run on non-neighborhoods so that cliques
    /// of the complement come out as independent sets of `self`.
    pub fn maximal_independent_sets(&self, cap: usize) -> Result<Vec<EdgeSet>, GraphError> {
        if self.n() == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let non_adj: Vec<EdgeSet> = self.complement().adj;
        let mut out = Vec::new();
        let mut enumerator = Enumerator {
            non_adj: &non_adj,
            out: &mut out,
            cap,
        };
        enumerator.expand(EdgeSet::new(), EdgeSet::full(self.n()), EdgeSet::new())?;
        out.sort();
        Ok(out)
    }

    /// All maximal matchings as sets of [`GraphEdgeId`], sorted.
    pub fn maximal_matchings(&self, cap: usize) -> Result<Vec<EdgeSet>, GraphError> {
        let (line, _) = self.line_graph();
        if line.n() == 0 {
            // Only the empty matching.
            return Ok(vec![EdgeSet::new()]);
        }
        line.maximal_independent_sets(cap)
    }

    /// The clutter of maximal independent sets over the vertex set.
    pub fn mis_clutter(&self, cap: usize) -> Result<Clutter, GraphError> {
        let sets = self.maximal_independent_sets(cap)?;
        Ok(Clutter::from_sets(self.labels.clone(), sets)?)
    }

    /// The clutter of maximal matchings over the edge set. Edge labels are
    /// `"<u>-<v>"`.
    pub fn matching_clutter(&self, cap: usize) -> Result<Clutter, GraphError> {
        if self.edge_count() == 0 {
            return Err(GraphError::NoGraphEdges);
        }
        let (line, _) = self.line_graph();
        let sets = line.maximal_independent_sets(cap)?;
        Ok(Clutter::from_sets(line.labels, sets)?)
    }
}

/// `{"vertices": [...], "adjacency": [["a","b"], ...]}` with pairs in
/// [`Graph::edges`] order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub adjacency: Vec<(String, String)>,
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        let adjacency = g
            .edges()
            .into_iter()
            .map(|(u, v)| (g.labels[u].clone(), g.labels[v].clone()))
            .collect();
        GraphJson {
            vertices: g.labels,
            adjacency,
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(j: GraphJson) -> Result<Self, GraphError> {
        let mut g = Graph::with_labels(j.vertices)?;
        let index: HashMap<&str, VertexId> = g
            .labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let mut pairs = Vec::with_capacity(j.adjacency.len());
        for (a, b) in &j.adjacency {
            let u = *index
                .get(a.as_str())
                .ok_or_else(|| GraphError::UnknownLabel(a.clone()))?;
            let v = *index
                .get(b.as_str())
                .ok_or_else(|| GraphError::UnknownLabel(b.clone()))?;
            pairs.push((u, v));
        }
        for (u, v) in pairs {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }
}

struct Enumerator<'a> {
    non_adj: &'a [EdgeSet],
    out: &'a mut Vec<EdgeSet>,
    cap: usize,
}

impl Enumerator<'_> {
    fn expand(&mut self, r: EdgeSet, mut p: EdgeSet, mut x: EdgeSet) -> Result<(), GraphError> {
        if p.is_empty() {
            if x.is_empty() {
                if self.out.len() >= self.cap {
                    return Err(GraphError::OutputCapExceeded(self.cap));
                }
                self.out.push(r);
            }
            return Ok(());
        }
        let pivot = p
            .union(&x)
            .iter()
            .max_by_key(|&u| (self.non_adj[u].intersection(&p).len(), std::cmp::Reverse(u)))
            .expect("p is nonempty");
        let branch = p.difference(&self.non_adj[pivot]);
        for v in &branch {
            let mut r2 = r.clone();
            r2.insert(v);
            let nv = &self.non_adj[v];
            self.expand(r2, p.intersection(nv), x.intersection(nv))?;
            p.remove(v);
            x.insert(v);
        }
        Ok(())
    }
}

/// Complete graph on `n` vertices.
pub fn complete_graph(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).expect("fresh pair");
        }
    }
    g
}

/// Complete bipartite graph with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v).expect("fresh pair");
        }
    }
    g
}

pub fn path_graph(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle_graph(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid cycle")
}

/// Star with center 0 and `leaves` leaves.
pub fn star_graph(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid star")
}
