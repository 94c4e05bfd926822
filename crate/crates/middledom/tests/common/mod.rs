//! Independent reference implementations used as oracles by the integration
//! suites. Everything here recomputes from first principles and shares no
//! code with the solver paths it certifies.

// Each integration test target compiles this module separately and uses a
// different subset of it.
#![allow(dead_code)]

use middledom::graph::Graph;

/// Maximum matching size by exhaustive branching over the edge list. A
/// completion can add at most `min(edges left, free vertices / 2)` more
/// edges, which bounds the search without losing exactness.
pub fn max_matching_bruteforce(g: &Graph) -> usize {
    fn rec(g: &Graph, idx: usize, used: &mut Vec<bool>, count: usize, best: &mut usize) {
        *best = (*best).max(count);
        let headroom = (g.size() - idx).min((g.order() - 2 * count) / 2);
        if idx == g.size() || count + headroom <= *best {
            return;
        }
        let e = g.edges()[idx];
        if !used[e.u()] && !used[e.v()] {
            used[e.u()] = true;
            used[e.v()] = true;
            rec(g, idx + 1, used, count + 1, best);
            used[e.u()] = false;
            used[e.v()] = false;
        }
        rec(g, idx + 1, used, count, best);
    }
    let mut best = 0;
    rec(g, 0, &mut vec![false; g.order()], 0, &mut best);
    best
}

/// Minimum edge cover size by subset enumeration over the edge list in
/// increasing cardinality; `None` when some vertex is isolated.
pub fn min_edge_cover_bruteforce(g: &Graph) -> Option<usize> {
    if g.order() == 0 {
        return Some(0);
    }
    if !g.isolated_vertices().is_empty() {
        return None;
    }
    let full: u64 = if g.order() == 64 { u64::MAX } else { (1 << g.order()) - 1 };
    let masks: Vec<u64> = g
        .edges()
        .iter()
        .map(|e| (1u64 << e.u()) | (1u64 << e.v()))
        .collect();

    fn rec(masks: &[u64], full: u64, from: usize, picks: usize, cover: u64) -> bool {
        let missing = (full & !cover).count_ones() as usize;
        if picks == 0 {
            return missing == 0;
        }
        if missing > 2 * picks {
            return false;
        }
        for idx in from..=masks.len().saturating_sub(picks) {
            if rec(masks, full, idx + 1, picks - 1, cover | masks[idx]) {
                return true;
            }
        }
        false
    }

    (g.order().div_ceil(2)..=g.size()).find(|&k| rec(&masks, full, 0, k, 0))
}

/// Domination number of an arbitrary graph by plain subset enumeration over
/// all vertices in increasing cardinality.
pub fn gamma_bruteforce(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    assert!(n <= 64, "reference oracle is for small graphs");
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let masks: Vec<u64> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .unwrap()
                .iter()
                .fold(1u64 << v, |acc, &w| acc | (1 << w))
        })
        .collect();

    fn rec(masks: &[u64], full: u64, from: usize, picks: usize, cover: u64) -> bool {
        if picks == 0 {
            return cover == full;
        }
        for idx in from..=masks.len().saturating_sub(picks) {
            if rec(masks, full, idx + 1, picks - 1, cover | masks[idx]) {
                return true;
            }
        }
        false
    }

    (0..=n).find(|&k| rec(&masks, full, 0, k, 0)).unwrap()
}

/// All inclusion-minimal dominating sets of `g`, as sorted vertex lists.
/// Exponential; for graphs of order up to ~16.
pub fn minimal_dominating_sets(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    assert!(n <= 20, "minimal dominating set enumeration is for small graphs");
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let masks: Vec<u32> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .unwrap()
                .iter()
                .fold(1u32 << v, |acc, &w| acc | (1 << w))
        })
        .collect();
    let coverage = |set: u32| -> u32 {
        (0..n)
            .filter(|&v| set >> v & 1 == 1)
            .fold(0u32, |acc, v| acc | masks[v])
    };
    let mut out = Vec::new();
    for set in 0..=full {
        if coverage(set) != full {
            continue;
        }
        let minimal = (0..n)
            .filter(|&v| set >> v & 1 == 1)
            .all(|v| coverage(set & !(1 << v)) != full);
        if minimal {
            out.push((0..n).filter(|&v| set >> v & 1 == 1).collect());
        }
    }
    out
}

/// Labeled-graph isomorphism by permutation search; for orders up to ~8.
pub fn is_isomorphic_small(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let n = a.order();
    assert!(n <= 8, "isomorphism search is for small graphs");
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if a.edges()
            .iter()
            .all(|e| b.has_edge(perm[e.u()], perm[e.v()]))
        {
            return true;
        }
        // Next lexicographic permutation.
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            return false;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

/// Convenience constructors shared across suites.
pub fn cycle(n: usize) -> Graph {
    Graph::build(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::build(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::build(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))).unwrap()
}

pub fn star(leaves: usize) -> Graph {
    Graph::build(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
}
