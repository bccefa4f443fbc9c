#![allow(dead_code)]

use clutterkit::{Clutter, EdgeSet, Graph};

/// Every antichain of nonempty subsets of `0..n` (`n <= 6`), as lists of
/// subset bitmasks. Subsets are added in increasing mask order, keeping a
/// mask of the subsets still compatible with everything chosen so far.
pub fn for_each_antichain(n: usize, mut f: impl FnMut(&[u64])) {
    assert!(n <= 6);
    let count = 1usize << n;
    // comparable[s] = set of subsets t (as bits of a u64) with s ⊆ t or t ⊆ s.
    let comparable: Vec<u64> = (0..count)
        .map(|s| {
            (0..count)
                .filter(|&t| s & t == s || s & t == t)
                .fold(0u64, |acc, t| acc | 1 << t)
        })
        .collect();
    fn rec(
        start: usize,
        count: usize,
        allowed: u64,
        comparable: &[u64],
        chosen: &mut Vec<u64>,
        f: &mut dyn FnMut(&[u64]),
    ) {
        f(chosen);
        for s in start..count {
            if allowed >> s & 1 == 1 {
                chosen.push(s as u64);
                rec(
                    s + 1,
                    count,
                    allowed & !comparable[s],
                    comparable,
                    chosen,
                    f,
                );
                chosen.pop();
            }
        }
    }
    // Subset 0 (the empty set) is excluded.
    let all = if count == 64 {
        u64::MAX
    } else {
        (1u64 << count) - 1
    };
    rec(1, count, all & !1, &comparable, &mut Vec::new(), &mut f);
}

pub fn mask_to_set(mask: u64) -> EdgeSet {
    (0..64).filter(|b| mask >> b & 1 == 1).collect()
}

pub fn clutter_from_masks(n: usize, masks: &[u64]) -> Clutter {
    Clutter::with_numeric_labels(n, masks.iter().map(|&m| mask_to_set(m)).collect()).unwrap()
}

/// Maximal independent sets by checking all 2^n vertex subsets.
pub fn brute_force_mis(g: &Graph) -> Vec<EdgeSet> {
    let n = g.n();
    let independent = |mask: u32| {
        (0..n)
            .all(|u| mask >> u & 1 == 0 || (0..n).all(|v| mask >> v & 1 == 0 || !g.has_edge(u, v)))
    };
    let mut out: Vec<EdgeSet> = (0u32..1 << n)
        .filter(|&mask| independent(mask))
        .filter(|&mask| (0..n).all(|v| mask >> v & 1 == 1 || !independent(mask | 1 << v)))
        .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

/// Maximal matchings by walking the subsets of the edge list (include or
/// exclude each edge in turn), cutting branches that are not matchings.
pub fn brute_force_matchings(g: &Graph) -> Vec<EdgeSet> {
    let edges = g.edges();
    let mut out = Vec::new();
    fn rec(
        i: usize,
        edges: &[(usize, usize)],
        used: &mut Vec<bool>,
        chosen: &mut Vec<usize>,
        out: &mut Vec<EdgeSet>,
    ) {
        if i == edges.len() {
            let maximal = edges.iter().all(|&(u, v)| used[u] || used[v]);
            if maximal {
                out.push(chosen.iter().copied().collect());
            }
            return;
        }
        let (u, v) = edges[i];
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            chosen.push(i);
            rec(i + 1, edges, used, chosen, out);
            chosen.pop();
            used[u] = false;
            used[v] = false;
        }
        rec(i + 1, edges, used, chosen, out);
    }
    rec(
        0,
        &edges,
        &mut vec![false; g.n()],
        &mut Vec::new(),
        &mut out,
    );
    out.sort();
    out
}
