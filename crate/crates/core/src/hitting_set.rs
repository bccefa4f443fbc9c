//! Exact minimum hitting set by branch and bound.
//!
//! The optimum size is found by deepening from a disjoint-packing lower
//! bound up to a greedy upper bound; each depth is a bounded feasibility
//! search that branches on the vertices of a smallest remaining target.
//! The lexicographically smallest optimum is then fixed one vertex at a
//! time, asking the same feasibility question with a restricted vertex pool.

use crate::bitset::{EdgeSet, VertexId};

/// Removes duplicates and every target that strictly contains another.
/// The first occurrence of each surviving target keeps its position.
pub fn dominance_reduce(targets: &[EdgeSet]) -> Vec<EdgeSet> {
    targets
        .iter()
        .enumerate()
        .filter(|&(i, t)| {
            !targets
                .iter()
                .enumerate()
                .any(|(j, s)| j != i && s.is_subset(t) && (s != t || j < i))
        })
        .map(|(_, t)| t.clone())
        .collect()
}

/// Size of a greedily built family of pairwise-disjoint targets. Any hitting
/// set needs one vertex per member of such a family.
pub fn packing_lower_bound(targets: &[EdgeSet]) -> usize {
    let mut order: Vec<&EdgeSet> = targets.iter().collect();
    order.sort_by_key(|t| t.len());
    let mut used = EdgeSet::new();
    let mut count = 0;
    for t in order {
        if t.is_disjoint(&used) {
            used.union_with(t);
            count += 1;
        }
    }
    count
}

/// Repeatedly takes the vertex hitting the most unhit targets (lowest id on
/// ties).
pub fn greedy_cover(targets: &[EdgeSet]) -> EdgeSet {
    let mut remaining: Vec<&EdgeSet> = targets.iter().collect();
    let mut chosen = EdgeSet::new();
    while !remaining.is_empty() {
        let bound = remaining.iter().map(|t| t.bound()).max().unwrap_or(0);
        let mut counts = vec![0usize; bound];
        for t in &remaining {
            for v in t.iter() {
                counts[v] += 1;
            }
        }
        let best = (0..bound)
            .max_by(|&a, &b| counts[a].cmp(&counts[b]).then(b.cmp(&a)))
            .expect("remaining targets are nonempty");
        chosen.insert(best);
        remaining.retain(|t| !t.contains(best));
    }
    chosen
}

/// Is there a hitting set of size at most `budget` drawn from `pool`?
/// Every target must already be restricted to `pool`.
fn feasible(targets: &[EdgeSet], pool: &EdgeSet, budget: usize) -> bool {
    if targets.is_empty() {
        return true;
    }
    if budget == 0 || targets.iter().any(EdgeSet::is_empty) {
        return false;
    }
    if packing_lower_bound(targets) > budget {
        return false;
    }
    let pivot = targets
        .iter()
        .min_by_key(|t| t.len())
        .expect("nonempty")
        .clone();
    let mut pool = pool.clone();
    for u in pivot.iter() {
        // Branches for earlier pivot vertices already covered every solution
        // containing them.
        pool.remove(u);
        let rest: Vec<EdgeSet> = targets
            .iter()
            .filter(|t| !t.contains(u))
            .map(|t| t.intersection(&pool))
            .collect();
        if feasible(&rest, &pool, budget - 1) {
            return true;
        }
    }
    false
}

fn union_of(targets: &[EdgeSet]) -> EdgeSet {
    let mut u = EdgeSet::new();
    for t in targets {
        u.union_with(t);
    }
    u
}

/// Size of a minimum hitting set. Targets must be nonempty.
pub fn minimum_size(targets: &[EdgeSet]) -> usize {
    let targets = dominance_reduce(targets);
    let pool = union_of(&targets);
    let upper = greedy_cover(&targets).len();
    (packing_lower_bound(&targets)..upper)
        .find(|&k| feasible(&targets, &pool, k))
        .unwrap_or(upper)
}

/// A minimum hitting set, lexicographically smallest by sorted id sequence
/// among all minimum ones. Targets must be nonempty.
pub fn lex_min_hitting_set(targets: &[EdgeSet]) -> EdgeSet {
    let targets = dominance_reduce(targets);
    let mut need = minimum_size(&targets);
    let mut remaining = targets;
    let mut pool = union_of(&remaining);
    let mut chosen = EdgeSet::new();
    while !remaining.is_empty() {
        let candidates: Vec<VertexId> = pool.to_vec();
        let mut placed = false;
        for v in candidates {
            if !remaining.iter().any(|t| t.contains(v)) {
                continue;
            }
            let later: EdgeSet = pool.iter().filter(|&u| u > v).collect();
            let rest: Vec<EdgeSet> = remaining
                .iter()
                .filter(|t| !t.contains(v))
                .map(|t| t.intersection(&later))
                .collect();
            if feasible(&rest, &later, need - 1) {
                chosen.insert(v);
                remaining = rest;
                pool = later;
                need -= 1;
                placed = true;
                break;
            }
        }
        assert!(
            placed,
            "optimum size was feasible, so some vertex must extend the prefix"
        );
    }
    chosen
}
