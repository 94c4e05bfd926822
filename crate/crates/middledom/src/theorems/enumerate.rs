//! Exhaustive enumeration of labeled simple graphs on few vertices.
//!
//! Graphs on `n` vertices are identified with bitmasks over the vertex pairs
//! in lexicographic order, so the stream order is deterministic and any graph
//! in a report can be reconstructed from `(n, mask)`.

use crate::graph::Graph;
use crate::theorems::TheoremError;

/// Largest order the enumerator accepts; 2^(8 choose 2) would already be out
/// of desk scale.
pub const ENUMERATION_CAP: usize = 7;

/// Vertex pairs `(u, v)` with `u < v` in lexicographic order.
pub fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect()
}

/// Number of labeled graphs on `n` vertices.
pub fn total_masks(n: usize) -> u64 {
    1u64 << (n * (n - 1) / 2)
}

/// Reconstructs the graph a `(n, mask)` pair denotes.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = pair_list(n);
    Graph::build(
        n,
        pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p),
    )
    .expect("pair list is valid")
}

/// Streams all labeled graphs on `n` vertices in mask order, optionally
/// filtered to connected graphs.
pub fn enumerate_graphs(
    n: usize,
    connected_only: bool,
) -> Result<impl Iterator<Item = (u64, Graph)>, TheoremError> {
    if n > ENUMERATION_CAP {
        return Err(TheoremError::CapExceeded { n, cap: ENUMERATION_CAP });
    }
    Ok((0..total_masks(n))
        .map(move |mask| (mask, graph_from_mask(n, mask)))
        .filter(move |(_, g)| !connected_only || g.is_connected()))
}
