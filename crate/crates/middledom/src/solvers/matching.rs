//! Maximum matching in general graphs via augmenting-path search with
//! blossom contraction.
//!
//! Runs in O(V^3): a greedy matching is grown first, then for every exposed
//! vertex one BFS over the alternating tree looks for an augmenting path,
//! contracting odd cycles on the fly through the `base` array.

use std::collections::VecDeque;

use crate::graph::{Edge, Graph, VertexId};

/// A set of pairwise vertex-disjoint edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Sorted list of vertices covered by the matching.
    pub fn covered_vertices(&self) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self
            .edges
            .iter()
            .flat_map(|e| [e.u(), e.v()])
            .collect();
        out.sort_unstable();
        out
    }
}

struct Search<'a> {
    g: &'a Graph,
    mate: Vec<Option<VertexId>>,
    parent: Vec<Option<VertexId>>,
    base: Vec<VertexId>,
    in_queue: Vec<bool>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        Self {
            g,
            mate: vec![None; n],
            parent: vec![None; n],
            base: (0..n).collect(),
            in_queue: vec![false; n],
        }
    }

    fn greedy_seed(&mut self) {
        for u in 0..self.g.order() {
            if self.mate[u].is_some() {
                continue;
            }
            for &v in self.g.neighbors(u).expect("vertex in range") {
                if self.mate[v].is_none() {
                    self.mate[u] = Some(v);
                    self.mate[v] = Some(u);
                    break;
                }
            }
        }
    }

    /// Lowest common ancestor of the bases of `a` and `b` in the alternating
    /// tree, walking matched/parent pointers.
    fn lca(&self, a: VertexId, b: VertexId) -> VertexId {
        let n = self.g.order();
        let mut marked = vec![false; n];
        let mut v = a;
        loop {
            v = self.base[v];
            marked[v] = true;
            match self.mate[v] {
                None => break,
                Some(m) => v = self.parent[m].expect("matched tree vertex has parent"),
            }
        }
        let mut v = b;
        loop {
            v = self.base[v];
            if marked[v] {
                return v;
            }
            v = self.parent[self.mate[v].expect("on alternating path")]
                .expect("matched tree vertex has parent");
        }
    }

    /// Marks blossom members on the path from `v` down to base `b`, rewiring
    /// parent pointers through `child` so later augmentation can traverse
    /// the contracted cycle.
    fn mark_path(
        &mut self,
        mut v: VertexId,
        b: VertexId,
        mut child: VertexId,
        in_blossom: &mut [bool],
    ) {
        while self.base[v] != b {
            in_blossom[self.base[v]] = true;
            let m = self.mate[v].expect("blossom path alternates");
            in_blossom[self.base[m]] = true;
            self.parent[v] = Some(child);
            child = m;
            v = self.parent[m].expect("blossom path extends to base");
        }
    }

    fn contract_blossom(&mut self, v: VertexId, to: VertexId, queue: &mut VecDeque<VertexId>) {
        let cur_base = self.lca(v, to);
        let mut in_blossom = vec![false; self.g.order()];
        self.mark_path(v, cur_base, to, &mut in_blossom);
        self.mark_path(to, cur_base, v, &mut in_blossom);
        for i in 0..self.g.order() {
            if in_blossom[self.base[i]] {
                self.base[i] = cur_base;
                if !self.in_queue[i] {
                    self.in_queue[i] = true;
                    queue.push_back(i);
                }
            }
        }
    }

    /// BFS from an exposed `root`; on success flips the matching along the
    /// augmenting path and returns true.
    fn augment_from(&mut self, root: VertexId) -> bool {
        let n = self.g.order();
        self.parent = vec![None; n];
        self.base = (0..n).collect();
        self.in_queue = vec![false; n];
        self.in_queue[root] = true;
        let mut queue = VecDeque::from([root]);

        while let Some(v) = queue.pop_front() {
            let adjacent: Vec<VertexId> =
                self.g.neighbors(v).expect("vertex in range").to_vec();
            for to in adjacent {
                if self.base[v] == self.base[to] || self.mate[v] == Some(to) {
                    continue;
                }
                let closes_cycle = to == root
                    || self
                        .mate[to]
                        .is_some_and(|m| self.parent[m].is_some());
                if closes_cycle {
                    self.contract_blossom(v, to, &mut queue);
                } else if self.parent[to].is_none() {
                    self.parent[to] = Some(v);
                    match self.mate[to] {
                        None => {
                            // Exposed vertex reached: flip along the path.
                            let mut u = Some(to);
                            while let Some(x) = u {
                                let p = self.parent[x].expect("path leads to root");
                                let next = self.mate[p];
                                self.mate[x] = Some(p);
                                self.mate[p] = Some(x);
                                u = next;
                            }
                            return true;
                        }
                        Some(m) => {
                            if !self.in_queue[m] {
                                self.in_queue[m] = true;
                                queue.push_back(m);
                            }
                        }
                    }
                }
            }
        }
        false
    }
}

/// Computes a maximum-cardinality matching. The result is canonical: edges
/// are returned in sorted order.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mut search = Search::new(g);
    search.greedy_seed();
    for root in 0..g.order() {
        if search.mate[root].is_none() {
            search.augment_from(root);
        }
    }
    let mut edges = Vec::new();
    for u in 0..g.order() {
        if let Some(v) = search.mate[u] {
            if u < v {
                edges.push(Edge::new(u, v).expect("mate is distinct"));
            }
        }
    }
    edges.sort_unstable();
    Matching { edges }
}
