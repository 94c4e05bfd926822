//! Graph constructions: middle graph, line graph, corona, 2-corona, and the
//! join with an empty graph.
//!
//! The middle graph of `G` subdivides every edge once and additionally joins
//! subdivision vertices of edges that share an endpoint. Its vertices are
//! numbered canonically: originals keep their indices `0..n`, then one vertex
//! per edge of `G`, appended in canonical edge order. That numbering is
//! stable, so dominating-set witnesses are reproducible across runs.

use std::fmt;

use crate::graph::{Edge, Graph, VertexId};

/// Where a middle-graph vertex came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexProvenance {
    /// A vertex of the source graph, same index.
    Original(VertexId),
    /// The subdivision vertex of source edge `(i, j)` with `i < j`.
    EdgeVertex(VertexId, VertexId),
}

impl fmt::Display for VertexProvenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexProvenance::Original(v) => write!(f, "v{v}"),
            VertexProvenance::EdgeVertex(i, j) => write!(f, "m{i}_{j}"),
        }
    }
}

/// A middle graph together with its source and the provenance of every
/// vertex. Keeping the source around lets solvers distinguish original
/// vertices from edge vertices, which the edge-set normalization and the
/// matching fast path both rely on.
#[derive(Clone, Debug)]
pub struct MiddleGraph {
    graph: Graph,
    provenance: Vec<VertexProvenance>,
    source: Graph,
}

impl MiddleGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn provenance(&self) -> &[VertexProvenance] {
        &self.provenance
    }

    /// Number of original vertices (they occupy indices `0..original_count`).
    pub fn original_count(&self) -> usize {
        self.source.order()
    }

    pub fn edge_vertex_count(&self) -> usize {
        self.source.size()
    }

    pub fn is_edge_vertex(&self, v: VertexId) -> bool {
        v >= self.source.order() && v < self.graph.order()
    }

    /// Middle-graph index of the subdivision vertex of source edge `{a, b}`.
    pub fn edge_vertex_index(&self, a: VertexId, b: VertexId) -> Option<VertexId> {
        Some(self.source.order() + self.source.edge_index(a, b)?)
    }

    /// The source edge behind an edge vertex.
    pub fn source_edge(&self, v: VertexId) -> Option<Edge> {
        match self.provenance.get(v)? {
            VertexProvenance::EdgeVertex(i, j) => Some(Edge::new(*i, *j).unwrap()),
            VertexProvenance::Original(_) => None,
        }
    }

    /// Display label: `v<i>` for originals, `m<i>_<j>` for edge vertices.
    pub fn label(&self, v: VertexId) -> String {
        self.provenance[v].to_string()
    }
}

/// Builds the middle graph of `g`.
pub fn middle_graph(g: &Graph) -> MiddleGraph {
    let n = g.order();
    let m = g.size();
    let mut provenance: Vec<VertexProvenance> = (0..n).map(VertexProvenance::Original).collect();
    provenance.extend(
        g.edges()
            .iter()
            .map(|e| VertexProvenance::EdgeVertex(e.u(), e.v())),
    );

    let mut pairs = Vec::with_capacity(2 * m);
    for (k, e) in g.edges().iter().enumerate() {
        pairs.push((e.u(), n + k));
        pairs.push((e.v(), n + k));
    }
    for (k, e) in g.edges().iter().enumerate() {
        for (l, f) in g.edges().iter().enumerate().skip(k + 1) {
            if e.is_incident_to(f.u()) || e.is_incident_to(f.v()) {
                pairs.push((n + k, n + l));
            }
        }
    }
    let graph = Graph::build(n + m, pairs).expect("middle graph pairs are valid");
    MiddleGraph { graph, provenance, source: g.clone() }
}

/// Builds the line graph of `g`; vertex `k` corresponds to `g.edges()[k]`.
pub fn line_graph(g: &Graph) -> (Graph, Vec<Edge>) {
    let m = g.size();
    let mut pairs = Vec::new();
    for (k, e) in g.edges().iter().enumerate() {
        for (l, f) in g.edges().iter().enumerate().skip(k + 1) {
            if e.is_incident_to(f.u()) || e.is_incident_to(f.v()) {
                pairs.push((k, l));
            }
        }
    }
    let graph = Graph::build(m, pairs).expect("line graph pairs are valid");
    (graph, g.edges().to_vec())
}

/// Attaches a pendant vertex `n + i` to each vertex `i`. Order doubles.
pub fn corona_k1(g: &Graph) -> Graph {
    let n = g.order();
    let pairs = g
        .edges()
        .iter()
        .map(|e| e.endpoints())
        .chain((0..n).map(|i| (i, n + i)));
    Graph::build(2 * n, pairs).expect("corona pairs are valid")
}

/// Attaches a path of length two, `i - (n + i) - (2n + i)`, to each vertex
/// `i`. Order triples.
pub fn corona_p2(g: &Graph) -> Graph {
    let n = g.order();
    let pairs = g
        .edges()
        .iter()
        .map(|e| e.endpoints())
        .chain((0..n).flat_map(|i| [(i, n + i), (n + i, 2 * n + i)]));
    Graph::build(3 * n, pairs).expect("2-corona pairs are valid")
}

/// Joins `g` with the edgeless graph on `p` new vertices: each new vertex
/// `n + j` becomes adjacent to every vertex of `g` and to nothing else.
pub fn join_empty(g: &Graph, p: usize) -> Graph {
    let n = g.order();
    let pairs = g
        .edges()
        .iter()
        .map(|e| e.endpoints())
        .chain((0..n).flat_map(move |i| (0..p).map(move |j| (i, n + j))));
    Graph::build(n + p, pairs).expect("join pairs are valid")
}
