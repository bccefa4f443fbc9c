//! Named clutter and graph families, plus seeded random instances.

use thiserror::Error;

use crate::bitset::EdgeSet;
use crate::clutter::{normalize_antichain, Clutter};
use crate::graph::{self, Graph};
use crate::rng::{SplitMix64, GOLDEN_GAMMA};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("n must be at least {min}, got {got}")]
    NTooSmall { min: usize, got: usize },
    #[error("k must be at least 2, got {0}")]
    KTooSmall(usize),
    #[error("graph sizes must be at least 1")]
    SizeTooSmall,
    #[error("edge size range {lo}..={hi} is not usable on {n} vertices")]
    InvalidSizeRange { lo: usize, hi: usize, n: usize },
    #[error("probability {num}/{den} is not in [0, 1]")]
    InvalidProbability { num: u64, den: u64 },
    #[error("no clutter satisfying (C1) and (C2) with at least two edges after {0} attempts")]
    RetriesExhausted(usize),
}

/// The two-edge family on `1..=n`: `{1,3,...,n}` and `{2,3,...,n}`.
pub fn example1(n: usize) -> Result<Clutter, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::NTooSmall { min: 3, got: n });
    }
    let labels: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
    let shared = (2..n).collect::<EdgeSet>();
    let mut e1 = shared.clone();
    e1.insert(0);
    let mut e2 = shared;
    e2.insert(1);
    Ok(Clutter::from_sets(labels, vec![e1, e2]).expect("two incomparable edges"))
}

/// Vertex layout of the square extremal family: clique `q_0..q_{k-1}` on ids
/// `0..k`, then pendant groups `P_i` of `k-1` vertices each, in blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalLayout {
    k: usize,
}

impl ExtremalLayout {
    pub fn new(k: usize) -> Result<Self, ConstructionError> {
        if k < 2 {
            return Err(ConstructionError::KTooSmall(k));
        }
        Ok(Self { k })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.k * self.k
    }

    pub fn clique(&self) -> EdgeSet {
        (0..self.k).collect()
    }

    pub fn pendant_group(&self, i: usize) -> EdgeSet {
        let start = self.k + i * (self.k - 1);
        (start..start + self.k - 1).collect()
    }

    /// All pendant vertices; `|U_0| = k(k-1)`.
    pub fn u0(&self) -> EdgeSet {
        (self.k..self.n()).collect()
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.k)
            .map(|i| format!("q{i}"))
            .chain((0..self.k * (self.k - 1)).map(|j| format!("p{j}")))
            .collect()
    }

    /// Edge for clique vertex `q_i`: `q_i` plus every pendant group other
    /// than its own.
    pub fn edge(&self, i: usize) -> EdgeSet {
        let mut e = EdgeSet::singleton(i);
        for j in (0..self.k).filter(|&j| j != i) {
            e.union_with(&self.pendant_group(j));
        }
        e
    }
}

/// k-clique with each clique vertex joined to its own group of `k-1`
/// pendant vertices.
pub fn extremal_graph(k: usize) -> Result<Graph, ConstructionError> {
    let layout = ExtremalLayout::new(k)?;
    let mut g = Graph::empty(layout.n());
    for u in 0..k {
        for v in u + 1..k {
            g.add_edge(u, v).expect("fresh pair");
        }
        for p in &layout.pendant_group(u) {
            g.add_edge(u, p).expect("fresh pair");
        }
    }
    Ok(g.relabelled(layout.labels()).expect("distinct labels"))
}

/// Maximal independent sets of [`extremal_graph`] with `U_0` removed:
/// `k` edges of size `1 + (k-1)^2`.
pub fn extremal_clutter(k: usize) -> Result<Clutter, ConstructionError> {
    let layout = ExtremalLayout::new(k)?;
    let edges = (0..k).map(|i| layout.edge(i)).collect();
    Ok(Clutter::from_sets(layout.labels(), edges).expect("pairwise incomparable edges"))
}

pub fn complete_graph(n: usize) -> Result<Graph, ConstructionError> {
    if n < 1 {
        return Err(ConstructionError::SizeTooSmall);
    }
    Ok(graph::complete_graph(n))
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, ConstructionError> {
    if a < 1 || b < 1 {
        return Err(ConstructionError::SizeTooSmall);
    }
    Ok(graph::complete_bipartite(a, b))
}

/// Default edge-size range for random clutters on `n` vertices: `1..=n-1`
/// (or `1..=1` when `n = 1`).
pub fn default_size_range(n: usize) -> (usize, usize) {
    (1, n.saturating_sub(1).max(1))
}

/// Draws `m_target` subsets of `0..n`, each of size uniform in
/// `size_range` (inclusive), then keeps the inclusion-maximal ones.
///
/// Draw order per subset: the size, then the members by partial
/// Fisher–Yates over `0..n`.
pub fn random_clutter(
    n: usize,
    m_target: usize,
    size_range: (usize, usize),
    seed: u64,
) -> Result<Clutter, ConstructionError> {
    let (lo, hi) = size_range;
    if n == 0 {
        return Err(ConstructionError::NTooSmall { min: 1, got: 0 });
    }
    if lo == 0 || lo > hi || hi > n {
        return Err(ConstructionError::InvalidSizeRange { lo, hi, n });
    }
    let mut rng = SplitMix64::new(seed);
    let drawn: Vec<EdgeSet> = (0..m_target)
        .map(|_| {
            let size = rng.between(lo, hi);
            rng.sample(n, size).into_iter().collect()
        })
        .collect();
    let edges = normalize_antichain(&drawn)
        .into_iter()
        .filter(|e| !e.is_empty())
        .collect();
    Ok(Clutter::with_numeric_labels(n, edges).expect("normalized family is an antichain"))
}

/// Seed used for retry `attempt` of [`random_clutter_c1c2`].
pub fn retry_seed(seed: u64, attempt: usize) -> u64 {
    seed.wrapping_add((attempt as u64).wrapping_mul(GOLDEN_GAMMA))
}

/// Like [`random_clutter`], with isolated vertices removed and retried on
/// derived seeds until the result has at least two edges and satisfies
/// (C1) and (C2).
pub fn random_clutter_c1c2(
    n: usize,
    m_target: usize,
    size_range: (usize, usize),
    seed: u64,
    max_retries: usize,
) -> Result<Clutter, ConstructionError> {
    for attempt in 0..max_retries {
        let c =
            random_clutter(n, m_target, size_range, retry_seed(seed, attempt))?.remove_isolated();
        if c.m() >= 2 && c.check_c1() == Ok(true) && c.check_c2() {
            return Ok(c);
        }
    }
    Err(ConstructionError::RetriesExhausted(max_retries))
}

/// Each pair `u < v`, in lexicographic order, is kept when a draw from
/// `0..p_den` falls below `p_num`.
pub fn random_graph(
    n: usize,
    p_num: u64,
    p_den: u64,
    seed: u64,
) -> Result<Graph, ConstructionError> {
    if p_den == 0 || p_num > p_den {
        return Err(ConstructionError::InvalidProbability {
            num: p_num,
            den: p_den,
        });
    }
    let mut rng = SplitMix64::new(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.below(p_den) < p_num {
                g.add_edge(u, v).expect("fresh pair");
            }
        }
    }
    Ok(g)
}
