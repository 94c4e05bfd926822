//! Immutable simple undirected graphs: neighborhoods, complement, induced
//! subgraphs, components, distances, and desk-scale Hamiltonian path search.
//!
//! Vertices are dense integer indices in `[0, n)`. Edges are stored in
//! canonical `(min, max)` order and all set-valued outputs are sorted, so
//! identical inputs always produce byte-identical serializations.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Dense vertex index in `[0, n)`.
pub type VertexId = usize;

/// Default node budget for [`Graph::has_hamiltonian_path`].
pub const DEFAULT_PATH_SEARCH_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: VertexId, order: usize },
    #[error("loop edge at vertex {0} is not allowed in a simple graph")]
    LoopEdge(VertexId),
    #[error("operation requires a non-empty vertex set")]
    EmptyVertexSet,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("search budget of {budget} nodes exceeded")]
    SearchBudgetExceeded { budget: u64 },
}

/// Undirected edge with endpoints stored so that `u() < v()`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    /// Builds the canonical form of the edge `{a, b}`; loops are rejected.
    pub fn new(a: VertexId, b: VertexId) -> Result<Self, GraphError> {
        if a == b {
            return Err(GraphError::LoopEdge(a));
        }
        Ok(Self { u: a.min(b), v: a.max(b) })
    }

    pub fn u(&self) -> VertexId {
        self.u
    }

    pub fn v(&self) -> VertexId {
        self.v
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    pub fn is_incident_to(&self, w: VertexId) -> bool {
        self.u == w || self.v == w
    }

    /// The endpoint opposite `w`, or `None` when `w` is not an endpoint.
    pub fn other_endpoint(&self, w: VertexId) -> Option<VertexId> {
        if self.u == w {
            Some(self.v)
        } else if self.v == w {
            Some(self.u)
        } else {
            None
        }
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// A simple undirected graph: vertex count, canonical edge set, and a sorted
/// per-vertex adjacency index. Immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<VertexId>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// An induced subgraph together with the vertex reindexing in both
/// directions, so witnesses computed on the subgraph can be translated back.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `old_to_new[v]` is the new index of original vertex `v`, if kept.
    pub old_to_new: Vec<Option<VertexId>>,
    /// `new_to_old[w]` is the original index of subgraph vertex `w`.
    pub new_to_old: Vec<VertexId>,
}

impl Graph {
    /// Builds a graph from a vertex count and an edge list. Duplicate pairs
    /// collapse to a single edge; loops and out-of-range endpoints are errors.
    pub fn build(
        n: usize,
        pairs: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for (a, b) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, order: n });
                }
            }
            edges.push(Edge::new(a, b)?);
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self { n, edges, adj })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical sorted order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.n
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, order: self.n })
        }
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        a < self.n && b < self.n && a != b && self.adj[a].binary_search(&b).is_ok()
    }

    /// Position of edge `{a, b}` in the canonical edge order.
    pub fn edge_index(&self, a: VertexId, b: VertexId) -> Option<usize> {
        let e = Edge::new(a, b).ok()?;
        self.edges.binary_search(&e).ok()
    }

    /// Open neighborhood of `v`, sorted ascending.
    pub fn neighbors(&self, v: VertexId) -> Result<&[VertexId], GraphError> {
        self.check_vertex(v)?;
        Ok(&self.adj[v])
    }

    /// Closed neighborhood of `v` (neighbors plus `v` itself), sorted.
    pub fn closed_neighborhood(&self, v: VertexId) -> Result<Vec<VertexId>, GraphError> {
        self.check_vertex(v)?;
        let mut out = self.adj[v].clone();
        let pos = out.partition_point(|&w| w < v);
        out.insert(pos, v);
        Ok(out)
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    /// Graph on the same vertices whose edges are exactly the non-edges.
    pub fn complement(&self) -> Graph {
        let mut pairs = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    pairs.push((u, v));
                }
            }
        }
        Graph::build(self.n, pairs).expect("complement pairs are valid")
    }

    /// Subgraph induced on `keep` (non-empty), with vertices reindexed
    /// densely in the order of the sorted kept set.
    pub fn induced_subgraph(&self, keep: &[VertexId]) -> Result<InducedSubgraph, GraphError> {
        if keep.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut kept: Vec<VertexId> = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        for &v in &kept {
            self.check_vertex(v)?;
        }
        let mut old_to_new = vec![None; self.n];
        for (new, &old) in kept.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let pairs = self.edges.iter().filter_map(|e| {
            match (old_to_new[e.u], old_to_new[e.v]) {
                (Some(a), Some(b)) => Some((a, b)),
                _ => None,
            }
        });
        let graph = Graph::build(kept.len(), pairs).expect("induced pairs are valid");
        Ok(InducedSubgraph { graph, old_to_new, new_to_old: kept })
    }

    /// The subgraph induced on all vertices except `v`.
    pub fn delete_vertex(&self, v: VertexId) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let keep: Vec<VertexId> = (0..self.n).filter(|&w| w != v).collect();
        if keep.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        Ok(self.induced_subgraph(&keep)?.graph)
    }

    /// Disjoint union; the second graph's vertices are offset by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let pairs = self
            .edges
            .iter()
            .map(|e| (e.u, e.v))
            .chain(other.edges.iter().map(|e| (e.u + self.n, e.v + self.n)));
        Graph::build(n, pairs).expect("union pairs are valid")
    }

    /// Partition of the vertices into maximal connected sets, each sorted,
    /// ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n >= 1 && self.connected_components().len() == 1
    }

    fn bfs_distances(&self, src: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in &self.adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path length between `a` and `b`; `None` when unreachable.
    pub fn distance(&self, a: VertexId, b: VertexId) -> Result<Option<usize>, GraphError> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        Ok(self.bfs_distances(a)[b])
    }

    /// Maximum pairwise distance; errors on empty or disconnected graphs.
    pub fn diameter(&self) -> Result<usize, GraphError> {
        if self.n == 0 {
            return Err(GraphError::Disconnected);
        }
        let mut best = 0;
        for v in 0..self.n {
            for d in self.bfs_distances(v) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Err(GraphError::Disconnected),
                }
            }
        }
        Ok(best)
    }

    /// Vertices of degree exactly 1.
    pub fn leaves(&self) -> Vec<VertexId> {
        (0..self.n).filter(|&v| self.adj[v].len() == 1).collect()
    }

    /// Vertices of degree 0.
    pub fn isolated_vertices(&self) -> Vec<VertexId> {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// Connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    /// Searches for a spanning path by depth-first extension over vertex
    /// orderings, trying start vertices and neighbor extensions in ascending
    /// order so the witness is deterministic. Every visited search node
    /// counts against `budget`; exhausting it is an explicit error rather
    /// than a silent hang.
    pub fn has_hamiltonian_path(
        &self,
        budget: u64,
    ) -> Result<Option<Vec<VertexId>>, GraphError> {
        if self.n == 0 {
            return Ok(Some(Vec::new()));
        }
        if self.n == 1 {
            return Ok(Some(vec![0]));
        }
        if !self.is_connected() {
            return Ok(None);
        }
        let mut nodes = 0u64;
        let mut path = Vec::with_capacity(self.n);
        let mut visited = vec![false; self.n];
        for start in 0..self.n {
            path.push(start);
            visited[start] = true;
            if self.extend_path(&mut path, &mut visited, &mut nodes, budget)? {
                return Ok(Some(path));
            }
            path.pop();
            visited[start] = false;
        }
        Ok(None)
    }

    fn extend_path(
        &self,
        path: &mut Vec<VertexId>,
        visited: &mut [bool],
        nodes: &mut u64,
        budget: u64,
    ) -> Result<bool, GraphError> {
        *nodes += 1;
        if *nodes > budget {
            return Err(GraphError::SearchBudgetExceeded { budget });
        }
        if path.len() == self.n {
            return Ok(true);
        }
        let last = *path.last().unwrap();
        for &w in &self.adj[last] {
            if !visited[w] {
                path.push(w);
                visited[w] = true;
                if self.extend_path(path, visited, nodes, budget)? {
                    return Ok(true);
                }
                path.pop();
                visited[w] = false;
            }
        }
        Ok(false)
    }
}
