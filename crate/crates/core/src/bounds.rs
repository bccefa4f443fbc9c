//! Exact comparison of hardness values against the lower bounds, theorem
//! verification on concrete clutters, and a step-by-step replay of the
//! lower-bound argument.
//!
//! Every bound has the form `1 / D` with `D = α − 2√β` and `D > 0`, so
//! `p/q ≥ 1/D` is equivalent to `p·α − q ≥ 2p·√β`. A negative left side
//! settles the comparison; otherwise both sides are squared once and
//! compared as unbounded integers.

use std::cmp::Ordering;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::{EdgeSet, VertexId};
use crate::clutter::Clutter;
use crate::graph::Graph;
use crate::hardness::{clutter_hardness, HardnessReport};
use crate::rational::Rational;
use crate::surd;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error("n must be at least {min}, got {got}")]
    NTooSmall { min: usize, got: usize },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("lower bound violated: {}", .0.summary())]
    TheoremViolated(Box<TheoremReport>),
    #[error("proof trace assertion failed: {}", .failed.join("; "))]
    TraceAssertionFailed {
        trace: Box<ProofTrace>,
        failed: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    Less,
    Equal,
    Greater,
}

impl From<Ordering> for Relation {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Relation::Less,
            Ordering::Equal => Relation::Equal,
            Ordering::Greater => Relation::Greater,
        }
    }
}

impl Relation {
    /// `Equal` or `Greater`.
    pub fn at_least(self) -> bool {
        self != Relation::Less
    }
}

/// Which lower bound a value is compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    /// `1/(n−1)`, valid for every clutter with at least two edges.
    General,
    /// `1/(n − 2√n + 2)`, for clutters satisfying (C1) and (C2).
    Main,
    /// `1/(1 + n − 2√(n−1))`, for maximal-independent-set clutters of
    /// connected graphs other than K_1, K_{2,2}, K_{3,3}, K_{4,4}.
    Mis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundDescriptor {
    pub kind: BoundKind,
    #[serde(with = "crate::json_int")]
    pub n: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundComparison {
    pub relation: Relation,
    pub lhs: Rational,
    pub bound: BoundDescriptor,
}

fn need_n(n: u64) -> Result<(), BoundsError> {
    if n < 2 {
        Err(BoundsError::NTooSmall {
            min: 2,
            got: n as usize,
        })
    } else {
        Ok(())
    }
}

pub fn general_lower_bound(n: u64) -> Result<Rational, BoundsError> {
    need_n(n)?;
    Ok(Rational::recip_of(n - 1))
}

/// `p/q` against `1/(α − 2√β)`; the caller guarantees the divisor is
/// positive.
fn compare_reciprocal_surd(c: Rational, alpha: u64, beta: u64) -> Ordering {
    let p = BigInt::from(c.num());
    let q = BigInt::from(c.den());
    let a = &p * BigInt::from(alpha) - q;
    if a < BigInt::from(0) {
        return Ordering::Less;
    }
    let rhs = BigInt::from(4) * &p * &p * BigInt::from(beta);
    (&a * &a).cmp(&rhs)
}

fn comparison(relation: Ordering, lhs: Rational, kind: BoundKind, n: u64) -> BoundComparison {
    BoundComparison {
        relation: relation.into(),
        lhs,
        bound: BoundDescriptor { kind, n },
    }
}

pub fn compare_general_bound(c: Rational, n: u64) -> Result<BoundComparison, BoundsError> {
    let bound = general_lower_bound(n)?;
    Ok(comparison(c.cmp(&bound), c, BoundKind::General, n))
}

/// `c` against `1/(n − 2√n + 2)`. The divisor is `(√n − 1)² + 1 > 0`.
pub fn compare_main_bound(c: Rational, n: u64) -> Result<BoundComparison, BoundsError> {
    need_n(n)?;
    Ok(comparison(
        compare_reciprocal_surd(c, n + 2, n),
        c,
        BoundKind::Main,
        n,
    ))
}

/// `c` against `1/(1 + n − 2√(n−1))`. The divisor is `(√(n−1) − 1)² + 1 > 0`.
pub fn compare_mis_bound(c: Rational, n: u64) -> Result<BoundComparison, BoundsError> {
    need_n(n)?;
    Ok(comparison(
        compare_reciprocal_surd(c, n + 1, n - 1),
        c,
        BoundKind::Mis,
        n,
    ))
}

pub fn compare_bound(kind: BoundKind, c: Rational, n: u64) -> Result<BoundComparison, BoundsError> {
    match kind {
        BoundKind::General => compare_general_bound(c, n),
        BoundKind::Main => compare_main_bound(c, n),
        BoundKind::Mis => compare_mis_bound(c, n),
    }
}

/// Checks `1/(n−1) ≤ 1/(n − 2√n + 2) ≤ 1/(1 + n − 2√(n−1))` exactly.
pub fn sandwich_check(n: u64) -> bool {
    if n < 3 {
        return false;
    }
    let big = |x: u64| BigInt::from(x);
    // Both surd divisors are positive.
    let main_div = surd::sign_one(&big(n + 2), &BigInt::from(-2), &big(n));
    let mis_div = surd::sign_one(&big(n + 1), &BigInt::from(-2), &big(n - 1));
    if main_div != Ordering::Greater || mis_div != Ordering::Greater {
        return false;
    }
    let lower = compare_main_bound(Rational::recip_of(n - 1), n)
        .map(|r| r.relation != Relation::Greater)
        .unwrap_or(false);
    // Reciprocals of positive numbers reverse order, so the upper half is
    // (n − 2√n + 2) − (1 + n − 2√(n−1)) = 1 − 2√n + 2√(n−1) ≥ 0.
    let upper = surd::sign_two(
        &BigInt::from(1),
        &BigInt::from(-2),
        &big(n),
        &BigInt::from(2),
        &big(n - 1),
    ) != Ordering::Less;
    lower && upper
}

/// Outcome of checking one clutter against one bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    #[serde(with = "crate::json_int")]
    pub n: usize,
    #[serde(with = "crate::json_int")]
    pub m: usize,
    /// `None` for the empty family, where (C1) is undefined.
    pub c1: Option<bool>,
    pub c2: bool,
    pub hardness: Rational,
    /// `None` when `n < 2`.
    pub comparison: Option<BoundComparison>,
    pub applicable: bool,
    /// Whether a `Less` relation on an applicable clutter is a violation.
    pub enforced: bool,
}

impl TheoremReport {
    pub fn summary(&self) -> String {
        match &self.comparison {
            Some(cmp) => format!(
                "c(L) = {} is {:?} the {:?} bound at n = {}",
                self.hardness, cmp.relation, cmp.bound.kind, self.n
            ),
            None => format!("c(L) = {} with n = {}", self.hardness, self.n),
        }
    }
}

/// Checks the (C1)+(C2) lower bound on one clutter.
pub fn verify_theorem(c: &Clutter) -> Result<TheoremReport, BoundsError> {
    verify_bound(c, BoundKind::Main)
}

/// Checks `c` against `kind`. The general bound applies whenever there are
/// at least two edges; the main bound additionally needs (C1) and (C2). The
/// maximal-independent-set bound is reported but not enforced, since a bare
/// clutter does not certify that it comes from a qualifying graph.
pub fn verify_bound(c: &Clutter, kind: BoundKind) -> Result<TheoremReport, BoundsError> {
    let report = clutter_hardness(c);
    let c1 = c.check_c1().ok();
    let c2 = c.check_c2();
    let n = c.n();
    let comparison = if n >= 2 {
        Some(compare_bound(kind, report.overall, n as u64)?)
    } else {
        None
    };
    let applicable = match kind {
        BoundKind::General => c.m() >= 2,
        BoundKind::Main | BoundKind::Mis => c1 == Some(true) && c2 && c.m() >= 2,
    };
    let out = TheoremReport {
        n,
        m: c.m(),
        c1,
        c2,
        hardness: report.overall,
        comparison,
        applicable,
        enforced: kind != BoundKind::Mis,
    };
    let holds = out.comparison.is_some_and(|r| r.relation.at_least());
    if out.applicable && out.enforced && !holds {
        return Err(BoundsError::TheoremViolated(Box::new(out)));
    }
    Ok(out)
}

/// `u` and `v` adjacent iff no clutter edge contains both.
pub fn auxiliary_graph(c: &Clutter) -> Graph {
    let n = c.n();
    let mut together = vec![EdgeSet::new(); n];
    for e in c.edges() {
        for v in e {
            together[v].union_with(e);
        }
    }
    let mut g = Graph::with_labels(c.labels().to_vec()).expect("clutter labels are distinct");
    for (u, shared) in together.iter().enumerate() {
        for v in u + 1..n {
            if !shared.contains(v) {
                g.add_edge(u, v).expect("fresh pair");
            }
        }
    }
    g
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    /// Some edge has a smallest recognizing subset of size at least two.
    TwoPlus,
    /// Every smallest recognizing subset is a single vertex.
    AllSingletons,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Cmp {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
}

/// One integer inequality of the argument, evaluated on concrete numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inequality {
    pub statement: String,
    #[serde(with = "crate::json_int")]
    pub lhs: i128,
    pub op: Cmp,
    #[serde(with = "crate::json_int")]
    pub rhs: i128,
    pub holds: bool,
}

impl Inequality {
    fn new(statement: &str, lhs: i128, op: Cmp, rhs: i128) -> Self {
        let holds = match op {
            Cmp::Le => lhs <= rhs,
            Cmp::Ge => lhs >= rhs,
        };
        Self {
            statement: statement.to_owned(),
            lhs,
            op,
            rhs,
            holds,
        }
    }
}

/// The objects of the lower-bound argument, materialized for one clutter.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProofTrace {
    #[serde(with = "crate::json_int")]
    pub n: usize,
    #[serde(with = "crate::json_int")]
    pub m: usize,
    pub branch: Branch,
    pub hardness: Rational,
    /// TwoPlus: the first edge whose smallest recognizing subset has two or
    /// more vertices.
    pub wide_edge: Option<usize>,
    /// AllSingletons: the recognizing vertex of each edge, in edge order.
    /// These form the clique Q.
    pub recognizer_vertices: Vec<VertexId>,
    pub aux_graph: Option<Graph>,
    pub clique_ok: Option<bool>,
    pub coverage_ok: Option<bool>,
    pub z: Option<VertexId>,
    pub degree_z: Option<usize>,
    pub e_z: Option<usize>,
    pub e_z_size: Option<usize>,
    /// The intermediate lower bound the chain establishes:
    /// `2/(n−1)` (TwoPlus) or `m/(m(n+2) − m² − n)` (AllSingletons).
    pub final_value: Rational,
    pub chain: Vec<Inequality>,
    /// `final_value` against the main bound.
    pub final_vs_bound: BoundComparison,
    /// `c(L)` against the main bound.
    pub conclusion: BoundComparison,
}

impl ProofTrace {
    /// Descriptions of every assertion that did not hold.
    pub fn failures(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .chain
            .iter()
            .filter(|i| !i.holds)
            .map(|i| format!("{} ({} vs {})", i.statement, i.lhs, i.rhs))
            .collect();
        if self.clique_ok == Some(false) {
            out.push("recognizer vertices are not pairwise adjacent".into());
        }
        if self.coverage_ok == Some(false) {
            out.push("a vertex outside Q has no neighbor in Q".into());
        }
        if !self.final_vs_bound.relation.at_least() {
            out.push("intermediate bound falls below the main bound".into());
        }
        if !self.conclusion.relation.at_least() {
            out.push("c(L) falls below the main bound".into());
        }
        out
    }

    pub fn all_verified(&self) -> bool {
        self.failures().is_empty()
    }
}

/// Replays the lower-bound argument on `c`, verifying every step on the
/// concrete numbers. Requires (C1), (C2) and at least two edges.
pub fn proof_trace(c: &Clutter) -> Result<ProofTrace, BoundsError> {
    if c.m() < 2 {
        return Err(BoundsError::PreconditionFailed(format!(
            "need at least two edges, got {}",
            c.m()
        )));
    }
    if c.check_c1() != Ok(true) {
        return Err(BoundsError::PreconditionFailed("(C1) does not hold".into()));
    }
    if !c.check_c2() {
        return Err(BoundsError::PreconditionFailed("(C2) does not hold".into()));
    }
    let report = clutter_hardness(c);
    let trace = match report
        .per_edge
        .iter()
        .position(|h| h.witness.subset.len() >= 2)
    {
        Some(wide) => two_plus_trace(c, &report, wide),
        None => singleton_trace(c, &report),
    };
    let failed = trace.failures();
    if failed.is_empty() {
        Ok(trace)
    } else {
        Err(BoundsError::TraceAssertionFailed {
            trace: Box::new(trace),
            failed,
        })
    }
}

fn two_plus_trace(c: &Clutter, report: &HardnessReport, wide: usize) -> ProofTrace {
    let (n, m) = (c.n() as i128, c.m() as i128);
    let s = report.per_edge[wide].witness.subset.len() as i128;
    let e = c.edge(wide).len() as i128;
    let (p, q) = (report.overall.num() as i128, report.overall.den() as i128);
    let final_value = Rational::new(2, c.n() as u64 - 1);
    let chain = vec![
        Inequality::new("|s_e| >= 2", s, Cmp::Ge, 2),
        Inequality::new("|e| <= n - 1", e, Cmp::Le, n - 1),
        Inequality::new(
            "c(L) >= 2/(n-1), as p(n-1) >= 2q",
            p * (n - 1),
            Cmp::Ge,
            2 * q,
        ),
    ];
    ProofTrace {
        n: c.n(),
        m: m as usize,
        branch: Branch::TwoPlus,
        hardness: report.overall,
        wide_edge: Some(wide),
        recognizer_vertices: Vec::new(),
        aux_graph: None,
        clique_ok: None,
        coverage_ok: None,
        z: None,
        degree_z: None,
        e_z: None,
        e_z_size: None,
        final_value,
        chain,
        final_vs_bound: compare_main_bound(final_value, c.n() as u64).expect("n >= 2"),
        conclusion: compare_main_bound(report.overall, c.n() as u64).expect("n >= 2"),
    }
}

fn singleton_trace(c: &Clutter, report: &HardnessReport) -> ProofTrace {
    let n = c.n();
    let m = c.m();
    let recognizers: Vec<VertexId> = report
        .per_edge
        .iter()
        .map(|h| h.witness.subset.first().expect("singleton witness"))
        .collect();
    let q: EdgeSet = recognizers.iter().copied().collect();
    let aux = auxiliary_graph(c);

    let clique_ok = q.len() == m
        && recognizers
            .iter()
            .enumerate()
            .all(|(i, &u)| recognizers[i + 1..].iter().all(|&v| aux.has_edge(u, v)));
    let coverage_ok = (0..n).all(|w| q.contains(w) || aux.neighbors(w).intersects(&q));

    // Highest degree in Q, lowest id on ties.
    let z = q
        .iter()
        .max_by(|&a, &b| aux.degree(a).cmp(&aux.degree(b)).then(b.cmp(&a)))
        .expect("m >= 2");
    let e_z = recognizers
        .iter()
        .position(|&v| v == z)
        .expect("z is a recognizer");
    let d = aux.degree(z) as i128;
    let size_ez = c.edge(e_z).len() as i128;
    let (ni, mi) = (n as i128, m as i128);
    let (p, qd) = (report.overall.num() as i128, report.overall.den() as i128);
    let denom = mi * (ni + 2) - mi * mi - ni;

    let chain = vec![
        Inequality::new(
            "m*d(z) >= m(m-1) + (n-m)",
            mi * d,
            Cmp::Ge,
            mi * (mi - 1) + (ni - mi),
        ),
        Inequality::new("|e_z| <= n - d(z)", size_ez, Cmp::Le, ni - d),
        Inequality::new("m <= n", mi, Cmp::Le, ni),
        Inequality::new(
            "(m^2 - n)^2 >= 0, so m + n/m >= 2*sqrt(n)",
            (mi * mi - ni) * (mi * mi - ni),
            Cmp::Ge,
            0,
        ),
        Inequality::new(
            "m^2 + n <= m(n+1), so m + n/m <= n + 1",
            mi * mi + ni,
            Cmp::Le,
            mi * (ni + 1),
        ),
        Inequality::new(
            "m(n+2) - m^2 - n >= m*|e_z|, so c(e_z) >= m/(m(n+2) - m^2 - n)",
            denom,
            Cmp::Ge,
            mi * size_ez,
        ),
        Inequality::new(
            "c(L) >= m/(m(n+2) - m^2 - n), as p(m(n+2) - m^2 - n) >= q*m",
            p * denom,
            Cmp::Ge,
            qd * mi,
        ),
    ];
    // denom >= m > 0 whenever 1 <= m <= n; a failure is reported by the chain.
    let final_value = Rational::new(m as u64, denom.max(1) as u64);

    ProofTrace {
        n,
        m,
        branch: Branch::AllSingletons,
        hardness: report.overall,
        wide_edge: None,
        recognizer_vertices: recognizers,
        aux_graph: Some(aux.clone()),
        clique_ok: Some(clique_ok),
        coverage_ok: Some(coverage_ok),
        z: Some(z),
        degree_z: Some(d as usize),
        e_z: Some(e_z),
        e_z_size: Some(size_ez as usize),
        final_value,
        chain,
        final_vs_bound: compare_main_bound(final_value, n as u64).expect("n >= 2"),
        conclusion: compare_main_bound(report.overall, n as u64).expect("n >= 2"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{example1, extremal_clutter};

    fn r(p: u64, q: u64) -> Rational {
        Rational::new(p, q)
    }

    #[test]
    fn general_bound_values() {
        assert_eq!(general_lower_bound(2).unwrap(), r(1, 1));
        assert_eq!(general_lower_bound(5).unwrap(), r(1, 4));
        assert_eq!(general_lower_bound(11).unwrap(), r(1, 10));
        assert!(matches!(
            general_lower_bound(1),
            Err(BoundsError::NTooSmall { .. })
        ));
    }

    #[test]
    fn main_bound_examples() {
        assert_eq!(
            compare_main_bound(r(1, 5), 9).unwrap().relation,
            Relation::Equal
        );
        assert_eq!(
            compare_main_bound(r(1, 2), 4).unwrap().relation,
            Relation::Equal
        );
        // A = 11 - 4 = 7, 49 > 4*1*9 = 36: 1/4 sits above 1/5.
        assert_eq!(
            compare_main_bound(r(1, 4), 9).unwrap().relation,
            Relation::Greater
        );
        assert_eq!(
            compare_main_bound(r(1, 6), 9).unwrap().relation,
            Relation::Less
        );
        assert_eq!(
            compare_main_bound(r(1, 4), 9).unwrap().bound.kind,
            BoundKind::Main
        );
        assert_eq!(
            compare_main_bound(Rational::ZERO, 9).unwrap().relation,
            Relation::Less
        );
        assert_eq!(
            compare_main_bound(r(1, 5), 10).unwrap().relation,
            Relation::Greater
        );
        assert!(compare_main_bound(r(1, 2), 1).is_err());
    }

    #[test]
    fn mis_bound_examples() {
        assert_eq!(
            compare_mis_bound(r(1, 2), 5).unwrap().relation,
            Relation::Equal
        );
        assert_eq!(
            compare_mis_bound(r(1, 1), 3).unwrap().relation,
            Relation::Greater
        );
        assert_eq!(
            compare_mis_bound(r(1, 2), 4).unwrap().relation,
            Relation::Less
        );
    }

    #[test]
    fn sandwich_examples() {
        assert!(sandwich_check(9));
        assert!(sandwich_check(4));
        assert!(sandwich_check(100));
        assert!(sandwich_check(3));
        assert!(!sandwich_check(2));
    }

    #[test]
    fn verify_examples() {
        let rep = verify_theorem(&extremal_clutter(3).unwrap()).unwrap();
        assert!(rep.applicable);
        assert_eq!(rep.comparison.unwrap().relation, Relation::Equal);

        let rep = verify_theorem(&example1(5).unwrap()).unwrap();
        assert!(!rep.applicable);
        assert_eq!(rep.c1, Some(false));
        // 1/4 < 1/(5 - 2√5 + 2) ≈ 0.39, harmless since (C1) fails.
        assert_eq!(rep.comparison.unwrap().relation, Relation::Less);

        let rep = verify_bound(&example1(5).unwrap(), BoundKind::General).unwrap();
        assert!(rep.applicable);
        assert_eq!(rep.comparison.unwrap().relation, Relation::Equal);

        // Below the MIS bound but not enforced.
        let rep = verify_bound(&extremal_clutter(3).unwrap(), BoundKind::Mis).unwrap();
        assert!(rep.applicable && !rep.enforced);
        assert_eq!(rep.comparison.unwrap().relation, Relation::Less);
    }

    #[test]
    fn aux_graph_examples() {
        let g = auxiliary_graph(&extremal_clutter(2).unwrap());
        // q0=0, q1=1, p0=2, p1=3; edges {q0,p1}, {q1,p0}
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);

        let c = Clutter::build(&["1", "2"], [vec!["1", "2"]]).unwrap();
        assert_eq!(auxiliary_graph(&c).edge_count(), 0);
        let c = Clutter::build(&["1", "2"], [vec!["1"], vec!["2"]]).unwrap();
        assert_eq!(auxiliary_graph(&c).edges(), vec![(0, 1)]);
    }

    #[test]
    fn trace_k2_golden() {
        let t = proof_trace(&extremal_clutter(2).unwrap()).unwrap();
        assert_eq!(t.branch, Branch::AllSingletons);
        assert_eq!((t.n, t.m), (4, 2));
        assert_eq!(t.recognizer_vertices, vec![0, 1]);
        assert_eq!(t.clique_ok, Some(true));
        assert_eq!(t.coverage_ok, Some(true));
        assert_eq!(t.z, Some(0));
        assert_eq!(t.degree_z, Some(2));
        assert_eq!(t.e_z, Some(0));
        assert_eq!(t.e_z_size, Some(2));
        assert_eq!(t.final_value, r(1, 2));
        assert_eq!(t.final_vs_bound.relation, Relation::Equal);
        assert_eq!(t.conclusion.relation, Relation::Equal);
    }

    #[test]
    fn trace_two_plus_branch() {
        // All 3-subsets of a 4-set: each edge is recognized only by itself.
        let c = Clutter::build(
            &["1", "2", "3", "4"],
            [
                vec!["1", "2", "3"],
                vec!["2", "3", "4"],
                vec!["1", "3", "4"],
                vec!["1", "2", "4"],
            ],
        )
        .unwrap();
        let t = proof_trace(&c).unwrap();
        assert_eq!(t.branch, Branch::TwoPlus);
        assert_eq!(t.wide_edge, Some(0));
        assert_eq!(t.hardness, r(1, 1));
        assert_eq!(t.final_value, r(2, 3));
        assert!(t.all_verified());
    }

    #[test]
    fn trace_preconditions() {
        assert!(matches!(
            proof_trace(&example1(5).unwrap()),
            Err(BoundsError::PreconditionFailed(_))
        ));
        let c = Clutter::build(&["a", "b", "c"], [vec!["a"], vec!["b"]]).unwrap();
        assert!(matches!(
            proof_trace(&c),
            Err(BoundsError::PreconditionFailed(_))
        ));
    }

    #[test]
    fn json_round_trip_is_exact() {
        let t = proof_trace(&extremal_clutter(3).unwrap()).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        let back: ProofTrace = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);

        let rep = verify_theorem(&extremal_clutter(3).unwrap()).unwrap();
        let s = serde_json::to_string(&rep).unwrap();
        assert_eq!(serde_json::from_str::<TheoremReport>(&s).unwrap(), rep);
    }
}
