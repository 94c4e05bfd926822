//! Exact domination-number computation for middle graphs.
//!
//! Three routes produce the same numbers and check each other:
//!
//! * [`gamma_oracle`] enumerates vertex subsets of an arbitrary graph.
//! * [`gamma_middle_oracle`] searches only edge-vertex subsets of a middle
//!   graph, which is exact because any dominating set of `M(G)` can be
//!   rewritten inside the edge vertices without growing (when `G` has no
//!   isolated vertices; isolated vertices are forced members).
//! * [`gamma_middle_fast`] is polynomial: the domination number of `M(G)`
//!   equals the edge cover number of `G`, computed as `n - |maximum
//!   matching|` with a general-graph matching.

mod matching;
mod oracle;

use thiserror::Error;

pub use matching::{maximum_matching, Matching};
pub use oracle::{gamma_middle_oracle, gamma_oracle, ORACLE_ORDER_CAP};

use crate::graph::{Edge, Graph, GraphError, VertexId};
use crate::transforms::MiddleGraph;

/// Default oracle budget in candidate-set evaluations.
pub const DEFAULT_ORACLE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("search budget of {budget} candidate evaluations exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("graph order {order} exceeds the subset-search capacity of {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("vertex v{0} is isolated; no edge can cover it")]
    IsolatedVertex(VertexId),
    #[error("the given set is not a dominating set")]
    NotDominating,
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// How a [`GammaResult`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Oracle,
    BranchBound,
    MatchingFastPath,
    Formula,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::BranchBound => "branch_bound",
            Method::MatchingFastPath => "matching_fast_path",
            Method::Formula => "formula",
        }
    }
}

/// An exact domination number together with a witness dominating set of
/// that cardinality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaResult {
    pub value: usize,
    /// Sorted vertex indices of the target graph.
    pub witness: Vec<VertexId>,
    pub method: Method,
}

impl GammaResult {
    /// Versioned JSON form; `label` renders witness vertices (for middle
    /// graphs, `v<i>` / `m<i>_<j>`).
    pub fn to_json(&self, label: impl Fn(VertexId) -> String) -> serde_json::Value {
        serde_json::json!({
            "schema_version": "1",
            "gamma": self.value,
            "method": self.method.as_str(),
            "witness": self.witness.iter().map(|&v| label(v)).collect::<Vec<_>>(),
        })
    }
}

/// A set of edges covering every vertex of its graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCover {
    edges: Vec<Edge>,
}

impl EdgeCover {
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// True iff every vertex of `g` is in `s` or adjacent to a member of `s`.
pub fn is_dominating_set(g: &Graph, s: &[VertexId]) -> Result<bool, SolverError> {
    let mut covered = vec![false; g.order()];
    for &v in s {
        for &w in g.neighbors(v)? {
            covered[w] = true;
        }
        covered[v] = true;
    }
    Ok(covered.iter().all(|&c| c))
}

/// Rewrites a dominating set of `M(G)` into one contained in the edge
/// vertices, never larger. Each step removes the smallest remaining original
/// vertex `v`: if some edge at `v` is missing from the set, the smallest such
/// edge vertex is swapped in; otherwise `v` is simply dropped. Requires the
/// input to dominate and the source to have no isolated vertices.
pub fn normalize_to_edge_set(
    mg: &MiddleGraph,
    s: &[VertexId],
) -> Result<Vec<VertexId>, SolverError> {
    if let Some(&v) = mg.source().isolated_vertices().first() {
        return Err(SolverError::IsolatedVertex(v));
    }
    for &v in s {
        if v >= mg.graph().order() {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: mg.graph().order(),
            }
            .into());
        }
    }
    if !is_dominating_set(mg.graph(), s)? {
        return Err(SolverError::NotDominating);
    }

    let n = mg.original_count();
    let mut set: std::collections::BTreeSet<VertexId> = s.iter().copied().collect();
    while let Some(&v) = set.iter().find(|&&v| v < n) {
        let incident: Vec<VertexId> = mg
            .source()
            .neighbors(v)
            .expect("vertex in range")
            .iter()
            .map(|&w| mg.edge_vertex_index(v, w).expect("edge exists"))
            .collect();
        set.remove(&v);
        if let Some(&missing) = incident.iter().find(|&&e| !set.contains(&e)) {
            set.insert(missing);
        }
    }
    let out: Vec<VertexId> = set.into_iter().collect();
    debug_assert!(is_dominating_set(mg.graph(), &out).unwrap());
    Ok(out)
}

/// Minimum edge cover via the matching identity `rho = n - nu`: a maximum
/// matching covers its endpoints, and each vertex it leaves exposed picks up
/// one incident edge. Errors naming the vertex when one is isolated.
pub fn edge_cover_number(g: &Graph) -> Result<(usize, EdgeCover), SolverError> {
    if let Some(&v) = g.isolated_vertices().first() {
        return Err(SolverError::IsolatedVertex(v));
    }
    let n = g.order();
    if n == 0 {
        return Ok((0, EdgeCover { edges: Vec::new() }));
    }
    let matching = maximum_matching(g);
    let mut in_cover = vec![false; n];
    let mut edges = matching.edges().to_vec();
    for &v in &matching.covered_vertices() {
        in_cover[v] = true;
    }
    for (v, covered) in in_cover.iter_mut().enumerate() {
        if !*covered {
            let w = g.neighbors(v).expect("vertex in range")[0];
            edges.push(Edge::new(v, w).expect("neighbor is distinct"));
            *covered = true;
        }
    }
    edges.sort_unstable();
    let count = n - matching.len();
    debug_assert_eq!(edges.len(), count);
    Ok((count, EdgeCover { edges }))
}

/// Polynomial exact `gamma(M(G))` for any graph.
///
/// Without isolated vertices the value is the edge cover number of `G` and
/// the witness is the cover, read as edge vertices. Isolated vertices of `G`
/// are isolated in `M(G)`, so each one joins the witness and contributes 1;
/// the rest is the cover of the non-isolated part. The edgeless graph yields
/// `n`. The isolated-vertex extension is cross-checked against the oracle in
/// the certification suites.
pub fn gamma_middle_fast(g: &Graph) -> GammaResult {
    let n = g.order();
    let isolated = g.isolated_vertices();
    let mut witness: Vec<VertexId> = isolated.clone();
    if isolated.len() < n {
        let keep: Vec<VertexId> = (0..n).filter(|v| !isolated.contains(v)).collect();
        let sub = g.induced_subgraph(&keep).expect("non-empty");
        let (_, cover) = edge_cover_number(&sub.graph).expect("no isolated vertices left");
        for e in cover.edges() {
            let (a, b) = (sub.new_to_old[e.u()], sub.new_to_old[e.v()]);
            let idx = g.edge_index(a, b).expect("cover edge exists in source");
            witness.push(n + idx);
        }
    }
    witness.sort_unstable();
    GammaResult {
        value: witness.len(),
        witness,
        method: Method::MatchingFastPath,
    }
}

fn for_each_subset_of_size(
    n: usize,
    k: usize,
    mut f: impl FnMut(&[usize]),
) {
    fn rec(n: usize, k: usize, from: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if acc.len() == k {
            f(acc);
            return;
        }
        let remaining = k - acc.len();
        for v in from..=n - remaining {
            acc.push(v);
            rec(n, k, v + 1, acc, f);
            acc.pop();
        }
    }
    if k > n {
        return;
    }
    rec(n, k, 0, &mut Vec::with_capacity(k), &mut f);
}

/// Evaluates `p + min { gamma(M(G[A])) : A subset of V(G), |A| = n - p }`,
/// which equals `gamma(M(G + empty_p))` for connected `G` and `0 < p < n`.
/// Induced parts may have isolated vertices; those go through the same
/// gated extension as [`gamma_middle_fast`].
pub fn gamma_join_via_subsets(g: &Graph, p: usize) -> Result<usize, SolverError> {
    let n = g.order();
    if n < 2 || !g.is_connected() {
        return Err(SolverError::Hypothesis(
            "requires a connected graph of order at least 2".into(),
        ));
    }
    if p == 0 || p >= n {
        return Err(SolverError::Hypothesis(format!(
            "requires 0 < p < n, got p={p} with n={n}"
        )));
    }
    let mut best = usize::MAX;
    for_each_subset_of_size(n, n - p, |subset| {
        let sub = g.induced_subgraph(subset).expect("non-empty subset");
        best = best.min(gamma_middle_fast(&sub.graph).value);
    });
    Ok(p + best)
}
