//! Named graph families and the catalog of closed-form `gamma(M(.))`
//! formulas with their applicability conditions.
//!
//! Generators use fixed canonical labelings (star center first, wheel hub
//! last, friendship hub first, double-star center then middles then leaves)
//! so that witness sets are comparable across runs. Formula entries refuse
//! out-of-domain parameters instead of extrapolating.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexId};
use crate::solvers::{gamma_middle_fast, GammaResult, Method};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid parameters for {family}: {message}")]
    InvalidParams { family: String, message: String },
    #[error("formula {id} not applicable: {message}")]
    NotApplicable { id: String, message: String },
    #[error("unknown family descriptor {0:?}")]
    BadDescriptor(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Path,
    Cycle,
    Star,
    DoubleStar,
    Wheel,
    Complete,
    CompleteBipartite,
    Friendship,
}

impl FamilyKind {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Star => "star",
            FamilyKind::DoubleStar => "double_star",
            FamilyKind::Wheel => "wheel",
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteBipartite => "kbip",
            FamilyKind::Friendship => "friendship",
        }
    }
}

/// A family name with its integer parameters, e.g. `cycle:6` or `kbip:2,3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, params: Vec<usize>) -> Self {
        Self { kind, params }
    }

    /// Parses a CLI descriptor such as `path:5` or `kbip:2,3`.
    pub fn parse(descriptor: &str) -> Result<Self, FamilyError> {
        let bad = || FamilyError::BadDescriptor(descriptor.to_string());
        let (name, rest) = descriptor.split_once(':').ok_or_else(bad)?;
        let kind = match name {
            "path" => FamilyKind::Path,
            "cycle" => FamilyKind::Cycle,
            "star" => FamilyKind::Star,
            "double_star" => FamilyKind::DoubleStar,
            "wheel" => FamilyKind::Wheel,
            "complete" => FamilyKind::Complete,
            "kbip" => FamilyKind::CompleteBipartite,
            "friendship" => FamilyKind::Friendship,
            _ => return Err(bad()),
        };
        let params = rest
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        let expected = if kind == FamilyKind::CompleteBipartite { 2 } else { 1 };
        if params.len() != expected {
            return Err(bad());
        }
        Ok(Self { kind, params })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        write!(f, "{}:{}", self.kind.name(), params.join(","))
    }
}

fn invalid(kind: FamilyKind, message: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParams {
        family: kind.name().to_string(),
        message: message.into(),
    }
}

fn single_param(spec: &FamilySpec) -> usize {
    spec.params[0]
}

/// Builds the graph a family spec describes.
pub fn generate(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    let kind = spec.kind;
    let build = |n: usize, pairs: Vec<(usize, usize)>| {
        Graph::build(n, pairs).expect("family pairs are valid")
    };
    match kind {
        FamilyKind::Path => {
            let n = single_param(spec);
            if n < 1 {
                return Err(invalid(kind, "order must be at least 1"));
            }
            Ok(build(n, (0..n - 1).map(|i| (i, i + 1)).collect()))
        }
        FamilyKind::Cycle => {
            let n = single_param(spec);
            if n < 3 {
                return Err(invalid(kind, "cycles need at least 3 vertices"));
            }
            Ok(build(n, (0..n).map(|i| (i, (i + 1) % n)).collect()))
        }
        FamilyKind::Star => {
            let n = single_param(spec);
            if n < 1 {
                return Err(invalid(kind, "stars need at least 1 leaf"));
            }
            Ok(build(n + 1, (1..=n).map(|i| (0, i)).collect()))
        }
        FamilyKind::DoubleStar => {
            // Center 0, middles 1..=n, leaves n+1..=2n.
            let n = single_param(spec);
            if n < 1 {
                return Err(invalid(kind, "double stars need at least 1 arm"));
            }
            let pairs = (1..=n).flat_map(|i| [(0, i), (i, n + i)]).collect();
            Ok(build(2 * n + 1, pairs))
        }
        FamilyKind::Wheel => {
            // Rim cycle 0..n, hub last at index n.
            let n = single_param(spec);
            if n < 3 {
                return Err(invalid(kind, "wheels need a rim of at least 3"));
            }
            let pairs = (0..n)
                .map(|i| (i, (i + 1) % n))
                .chain((0..n).map(|i| (i, n)))
                .collect();
            Ok(build(n + 1, pairs))
        }
        FamilyKind::Complete => {
            let n = single_param(spec);
            if n < 1 {
                return Err(invalid(kind, "order must be at least 1"));
            }
            let pairs = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
            Ok(build(n, pairs))
        }
        FamilyKind::CompleteBipartite => {
            let (n1, n2) = (spec.params[0], spec.params[1]);
            if n1 < 1 || n2 < 1 {
                return Err(invalid(kind, "both parts need at least 1 vertex"));
            }
            let pairs = (0..n1).flat_map(|i| (0..n2).map(move |j| (i, n1 + j))).collect();
            Ok(build(n1 + n2, pairs))
        }
        FamilyKind::Friendship => {
            // Hub 0; triangle i uses vertices 2i-1 and 2i.
            let n = single_param(spec);
            if n < 1 {
                return Err(invalid(kind, "friendship graphs need at least 1 triangle"));
            }
            let pairs = (1..=n)
                .flat_map(|i| [(0, 2 * i - 1), (0, 2 * i), (2 * i - 1, 2 * i)])
                .collect();
            Ok(build(2 * n + 1, pairs))
        }
    }
}

/// A closed-form request: either a named family or one of the constructions
/// whose value is expressed in terms of a base graph.
#[derive(Clone, Debug)]
pub enum FormulaQuery<'a> {
    Family(FamilySpec),
    /// `K_{1,n} + empty_p`.
    StarJoin { n: usize, p: usize },
    /// `G + empty_p` for `G` a path, cycle, wheel, or complete graph of the
    /// given family parameter, with `p` below the order of `G`.
    FamilyJoin { kind: FamilyKind, n: usize, p: usize },
    /// `G + empty_p` with `p >= |V(G)|`.
    JoinBigP { base: &'a Graph, p: usize },
    Corona { base: &'a Graph },
    Corona2 { base: &'a Graph },
}

/// Catalog entry metadata for report traceability.
#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub anchor: &'static str,
}

/// The closed-form results the crate knows, with the statement each entry
/// evaluates. Wheels are indexed by rim size here, so a wheel of order N
/// has value ceil(N/2) like every other graph with a spanning path.
pub const CATALOG: &[CatalogEntry] = &[
    CatalogEntry { id: "star", anchor: "γ(M(K_{1,n})) = n" },
    CatalogEntry { id: "double_star", anchor: "γ(M(S_{1,n,n})) = n+1" },
    CatalogEntry { id: "path", anchor: "γ(M(P_n)) = ⌈n/2⌉" },
    CatalogEntry { id: "cycle", anchor: "γ(M(C_n)) = ⌈n/2⌉" },
    CatalogEntry { id: "wheel", anchor: "γ(M(W)) = ⌈|V(W)|/2⌉ for the wheel W on a rim of n" },
    CatalogEntry { id: "complete", anchor: "γ(M(K_n)) = ⌈n/2⌉" },
    CatalogEntry { id: "kbip", anchor: "γ(M(K_{n1,n2})) = n2 for n2 ≥ n1 ≥ 1" },
    CatalogEntry { id: "friendship", anchor: "γ(M(F_n)) = n+1" },
    CatalogEntry {
        id: "star_join",
        anchor: "γ(M(K_{1,n} + K̄_p)) = max{n, p} for p ≠ n, and n+1 at p = n",
    },
    CatalogEntry {
        id: "family_join",
        anchor: "γ(M(G + K̄_p)) = ⌈(N+p)/2⌉ for G of order N a path, cycle, wheel, or complete graph, p < N",
    },
    CatalogEntry { id: "join_big_p", anchor: "γ(M(G + K̄_p)) = p for connected G, p ≥ n" },
    CatalogEntry { id: "corona", anchor: "γ(M(G∘K_1)) = n for connected G of order n ≥ 2" },
    CatalogEntry { id: "corona2", anchor: "γ(M(G∘P_2)) = n + γ(M(G)) for connected G, n ≥ 2" },
];

fn not_applicable(id: &str, message: impl Into<String>) -> FamilyError {
    FamilyError::NotApplicable { id: id.to_string(), message: message.into() }
}

/// Exact closed-form value of `gamma(M(.))` for the query, or a
/// not-applicable error outside the stated domain. Never extrapolates.
pub fn formula_gamma_middle(query: &FormulaQuery) -> Result<usize, FamilyError> {
    match query {
        FormulaQuery::Family(spec) => family_formula_value(spec),
        FormulaQuery::StarJoin { n, p } => {
            if *n < 1 {
                return Err(not_applicable("star_join", "needs n ≥ 1"));
            }
            // Below the star's leaf count the disjoint leaf neighborhoods
            // force n; from p = order = n+1 upward the big-p join value p
            // takes over. Exactly at p = n neither regime applies and the
            // min-over-subsets identity leaves n + γ(M(K_1)) = n + 1.
            Ok(match p.cmp(n) {
                std::cmp::Ordering::Less => *n,
                std::cmp::Ordering::Equal => *n + 1,
                std::cmp::Ordering::Greater => *p,
            })
        }
        FormulaQuery::FamilyJoin { kind, n, p } => {
            let order = match kind {
                FamilyKind::Path | FamilyKind::Cycle | FamilyKind::Complete => *n,
                FamilyKind::Wheel => *n + 1,
                _ => {
                    return Err(not_applicable(
                        "family_join",
                        "only paths, cycles, wheels, and complete graphs",
                    ))
                }
            };
            if *n < 3 {
                return Err(not_applicable("family_join", "needs family parameter ≥ 3"));
            }
            if *p >= order {
                return Err(not_applicable("family_join", "needs p below the order of G"));
            }
            Ok((order + p).div_ceil(2))
        }
        FormulaQuery::JoinBigP { base, p } => {
            let n = base.order();
            if n < 2 || !base.is_connected() {
                return Err(not_applicable("join_big_p", "needs connected G with n ≥ 2"));
            }
            if *p < n {
                return Err(not_applicable("join_big_p", "needs p ≥ n"));
            }
            Ok(*p)
        }
        FormulaQuery::Corona { base } => {
            if base.order() < 2 || !base.is_connected() {
                return Err(not_applicable("corona", "needs connected G with n ≥ 2"));
            }
            Ok(base.order())
        }
        FormulaQuery::Corona2 { base } => {
            if base.order() < 2 || !base.is_connected() {
                return Err(not_applicable("corona2", "needs connected G with n ≥ 2"));
            }
            Ok(base.order() + gamma_middle_fast(base).value)
        }
    }
}

fn family_formula_value(spec: &FamilySpec) -> Result<usize, FamilyError> {
    let kind = spec.kind;
    match kind {
        FamilyKind::Star => {
            let n = single_param(spec);
            if n < 1 {
                return Err(not_applicable("star", "needs n ≥ 1"));
            }
            Ok(n)
        }
        FamilyKind::DoubleStar => {
            let n = single_param(spec);
            if n < 2 {
                return Err(not_applicable("double_star", "stated for n ≥ 2"));
            }
            Ok(n + 1)
        }
        FamilyKind::Path => {
            let n = single_param(spec);
            if n < 2 {
                return Err(not_applicable("path", "stated for n ≥ 2"));
            }
            Ok(n.div_ceil(2))
        }
        FamilyKind::Cycle => {
            let n = single_param(spec);
            if n < 3 {
                return Err(not_applicable("cycle", "needs n ≥ 3"));
            }
            Ok(n.div_ceil(2))
        }
        FamilyKind::Wheel => {
            // The generated wheel has order n+1, and any graph of order N
            // with a spanning path has value ceil(N/2).
            let n = single_param(spec);
            if n < 3 {
                return Err(not_applicable("wheel", "needs a rim of at least 3"));
            }
            Ok((n + 1).div_ceil(2))
        }
        FamilyKind::Complete => {
            let n = single_param(spec);
            if n < 2 {
                return Err(not_applicable("complete", "stated for n ≥ 2"));
            }
            Ok(n.div_ceil(2))
        }
        FamilyKind::CompleteBipartite => {
            let (n1, n2) = (spec.params[0], spec.params[1]);
            if n1 < 1 || n2 < n1 {
                return Err(not_applicable("kbip", "stated for n2 ≥ n1 ≥ 1"));
            }
            Ok(n2)
        }
        FamilyKind::Friendship => {
            // n = 1 is a plain triangle; the cycle result gives the same 2.
            let n = single_param(spec);
            if n < 1 {
                return Err(not_applicable("friendship", "needs n ≥ 1"));
            }
            Ok(n + 1)
        }
    }
}

/// Alternating edges of a spanning path, plus the final edge when the order
/// is odd. This is an edge cover of the path and hence a dominating set of
/// the middle graph, of size ceil(N/2).
fn spanning_path_cover(g: &Graph, order: &[VertexId]) -> Vec<VertexId> {
    let n = order.len();
    let mut witness = Vec::new();
    let mut take = |a: VertexId, b: VertexId| {
        let idx = g.edge_index(a, b).expect("consecutive path vertices are adjacent");
        witness.push(g.order() + idx);
    };
    for k in (0..n - 1).step_by(2) {
        take(order[k], order[k + 1]);
    }
    if n % 2 == 1 {
        take(order[n - 2], order[n - 1]);
    }
    witness.sort_unstable();
    witness
}

/// Closed-form result for a named family together with the generated graph:
/// the value comes from the catalog and the witness from the explicit
/// construction behind it, tagged [`Method::Formula`]. Witness indices refer
/// to the middle graph of the returned graph.
pub fn family_gamma_result(spec: &FamilySpec) -> Result<(Graph, GammaResult), FamilyError> {
    let g = generate(spec)?;
    let value = family_formula_value(spec)?;
    let n_orig = g.order();
    let edge_vertex = |a: VertexId, b: VertexId| {
        n_orig + g.edge_index(a, b).expect("family edge exists")
    };

    let mut witness: Vec<VertexId> = match spec.kind {
        FamilyKind::Path => {
            let order: Vec<VertexId> = (0..n_orig).collect();
            spanning_path_cover(&g, &order)
        }
        FamilyKind::Cycle | FamilyKind::Complete => {
            let order: Vec<VertexId> = (0..n_orig).collect();
            spanning_path_cover(&g, &order)
        }
        FamilyKind::Wheel => {
            // Rim in order, hub last: a spanning path of the wheel.
            let order: Vec<VertexId> = (0..n_orig).collect();
            spanning_path_cover(&g, &order)
        }
        FamilyKind::Star => {
            let n = single_param(spec);
            (1..=n).map(|i| edge_vertex(0, i)).collect()
        }
        FamilyKind::DoubleStar => {
            let n = single_param(spec);
            let mut w: Vec<VertexId> = (1..=n).map(|i| edge_vertex(i, n + i)).collect();
            w.push(0);
            w
        }
        FamilyKind::CompleteBipartite => {
            let (n1, n2) = (spec.params[0], spec.params[1]);
            let mut w: Vec<VertexId> = (0..n1).map(|i| edge_vertex(i, n1 + i)).collect();
            w.extend((n1..n2).map(|j| edge_vertex(n1 - 1, n1 + j)));
            w
        }
        FamilyKind::Friendship => {
            let n = single_param(spec);
            let mut w: Vec<VertexId> =
                (1..=n).map(|i| edge_vertex(2 * i - 1, 2 * i)).collect();
            w.push(0);
            w
        }
    };
    witness.sort_unstable();
    debug_assert_eq!(witness.len(), value);
    Ok((g, GammaResult { value, witness, method: Method::Formula }))
}
