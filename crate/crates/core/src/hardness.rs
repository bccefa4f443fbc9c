//! Smallest recognizing subsets and hardness.
//!
//! A subset `s` of edge `e` is recognizing when `e` is the only edge that
//! contains it. Equivalently, `s` meets `e \ e'` for every other edge `e'`:
//! `s ⊆ e'` fails exactly when some member of `s` lies outside `e'`, and
//! since `s ⊆ e` that member is in `e \ e'`. The antichain property makes
//! every such difference nonempty, so the smallest recognizing subsets of
//! `e` are the minimum hitting sets of the differences.

use itertools::Itertools;
use thiserror::Error;

use crate::bitset::EdgeSet;
use crate::clutter::Clutter;
use crate::hitting_set;
use crate::rational::Rational;

/// Largest edge the exhaustive oracle will enumerate.
pub const ORACLE_MAX_EDGE: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HardnessError {
    #[error("edge index {index} out of range (clutter has {m} edges)")]
    IndexOutOfRange { index: usize, m: usize },
    #[error("hitting-set target {0} is empty")]
    EmptyTarget(usize),
    #[error(
        "edge {index} has {size} vertices; the exhaustive oracle is limited to {ORACLE_MAX_EDGE}"
    )]
    EdgeTooLarge { index: usize, size: usize },
}

/// A smallest recognizing subset of one edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognizingWitness {
    pub edge_index: usize,
    pub subset: EdgeSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeHardness {
    pub c: Rational,
    pub witness: RecognizingWitness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HardnessReport {
    pub per_edge: Vec<EdgeHardness>,
    pub overall: Rational,
    /// Smallest index attaining `overall`; `None` only for the empty family.
    pub argmax_edge: Option<usize>,
}

/// Which solver computes the witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    BranchAndBound,
    Exhaustive,
}

fn check_index(c: &Clutter, i: usize) -> Result<(), HardnessError> {
    if i < c.m() {
        Ok(())
    } else {
        Err(HardnessError::IndexOutOfRange { index: i, m: c.m() })
    }
}

/// `{edges[i] \ edges[j] : j ≠ i}` with duplicates and supersets removed.
pub fn difference_targets(c: &Clutter, i: usize) -> Result<Vec<EdgeSet>, HardnessError> {
    check_index(c, i)?;
    let e = c.edge(i);
    let raw: Vec<EdgeSet> = c
        .edges()
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, f)| e.difference(f))
        .collect();
    Ok(hitting_set::dominance_reduce(&raw))
}

/// Minimum-cardinality set meeting every target; the lexicographically
/// smallest one when several exist.
pub fn min_hitting_set(targets: &[EdgeSet]) -> Result<EdgeSet, HardnessError> {
    if let Some(i) = targets.iter().position(EdgeSet::is_empty) {
        return Err(HardnessError::EmptyTarget(i));
    }
    Ok(hitting_set::lex_min_hitting_set(targets))
}

pub fn min_recognizing_subset(c: &Clutter, i: usize) -> Result<RecognizingWitness, HardnessError> {
    let targets = difference_targets(c, i)?;
    let subset = min_hitting_set(&targets)?;
    Ok(RecognizingWitness {
        edge_index: i,
        subset,
    })
}

/// Direct check of the definition: `subset ⊆ edges[i]` and no other edge
/// contains `subset`.
pub fn is_recognizing(c: &Clutter, i: usize, subset: &EdgeSet) -> bool {
    subset.is_subset(c.edge(i))
        && c.edges()
            .iter()
            .enumerate()
            .all(|(j, f)| j == i || !subset.is_subset(f))
}

/// Enumerates subsets of `edges[i]` by (size, lexicographic order) and
/// returns the first recognizing one.
pub fn brute_force_min_recognizing(
    c: &Clutter,
    i: usize,
) -> Result<RecognizingWitness, HardnessError> {
    check_index(c, i)?;
    let members = c.edge(i).to_vec();
    if members.len() > ORACLE_MAX_EDGE {
        return Err(HardnessError::EdgeTooLarge {
            index: i,
            size: members.len(),
        });
    }
    for k in 0..=members.len() {
        for combo in members.iter().copied().combinations(k) {
            let s: EdgeSet = combo.into_iter().collect();
            if is_recognizing(c, i, &s) {
                return Ok(RecognizingWitness {
                    edge_index: i,
                    subset: s,
                });
            }
        }
    }
    unreachable!("an edge of an antichain always recognizes itself")
}

fn witness_with(
    c: &Clutter,
    i: usize,
    method: Method,
) -> Result<RecognizingWitness, HardnessError> {
    match method {
        Method::BranchAndBound => min_recognizing_subset(c, i),
        Method::Exhaustive => brute_force_min_recognizing(c, i),
    }
}

fn ratio(witness: &RecognizingWitness, c: &Clutter) -> Rational {
    Rational::new(
        witness.subset.len() as u64,
        c.edge(witness.edge_index).len() as u64,
    )
}

pub fn edge_hardness(c: &Clutter, i: usize) -> Result<Rational, HardnessError> {
    edge_report(c, i, Method::BranchAndBound).map(|h| h.c)
}

pub fn edge_report(c: &Clutter, i: usize, method: Method) -> Result<EdgeHardness, HardnessError> {
    let witness = witness_with(c, i, method)?;
    Ok(EdgeHardness {
        c: ratio(&witness, c),
        witness,
    })
}

pub fn clutter_hardness(c: &Clutter) -> HardnessReport {
    clutter_hardness_with(c, Method::BranchAndBound)
        .expect("the branch-and-bound path has no size limit")
}

/// Full report with an explicit solver. Edges are processed in index order.
pub fn clutter_hardness_with(c: &Clutter, method: Method) -> Result<HardnessReport, HardnessError> {
    let per_edge = (0..c.m())
        .map(|i| edge_report(c, i, method))
        .collect::<Result<Vec<_>, _>>()?;
    let mut overall = Rational::ZERO;
    let mut argmax_edge = None;
    for (i, h) in per_edge.iter().enumerate() {
        if argmax_edge.is_none() || h.c > overall {
            overall = h.c;
            argmax_edge = Some(i);
        }
    }
    Ok(HardnessReport {
        per_edge,
        overall,
        argmax_edge,
    })
}
