//! Exact domination numbers of middle graphs.
//!
//! The middle graph `M(G)` subdivides each edge of `G` once and joins
//! subdivision vertices of edges sharing an endpoint. This crate builds the
//! transform, computes `gamma(M(G))` exactly along three mutually checking
//! routes (subset-search oracles, the polynomial edge-cover/matching fast
//! path, and closed-form family formulas), and certifies the bounds and
//! identities relating them over exhaustively enumerated small graphs.

pub mod families;
pub mod graph;
pub mod io;
pub mod solvers;
pub mod theorems;
pub mod transforms;

pub use graph::{Edge, Graph, GraphError, VertexId};
pub use solvers::{
    gamma_middle_fast, gamma_middle_oracle, gamma_oracle, GammaResult, Method, SolverError,
};
pub use transforms::{middle_graph, MiddleGraph, VertexProvenance};
