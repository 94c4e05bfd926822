//! Edge-list text format and DOT export.
//!
//! The edge-list format is a header line `n m` followed by `m` lines `u v`
//! with 0-based vertex indices, ASCII with LF line endings. Lines starting
//! with `#` are comments and are ignored wherever they appear.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::transforms::MiddleGraph;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("header declares {expected} edges but {found} edge lines found")]
    EdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize), ParseError> {
    let mut it = line.split_whitespace();
    let a = it
        .next()
        .ok_or_else(|| syntax(line_no, "expected two integers"))?;
    let b = it
        .next()
        .ok_or_else(|| syntax(line_no, "expected two integers"))?;
    if it.next().is_some() {
        return Err(syntax(line_no, "expected exactly two integers"));
    }
    let a = a
        .parse()
        .map_err(|_| syntax(line_no, format!("invalid integer {a:?}")))?;
    let b = b
        .parse()
        .map_err(|_| syntax(line_no, format!("invalid integer {b:?}")))?;
    Ok((a, b))
}

/// Parses the edge-list format into a [`Graph`].
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut content = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line_no, header) = content.next().ok_or_else(|| syntax(0, "missing header line"))?;
    let (n, m) = parse_pair(line_no, header)?;

    let mut pairs = Vec::with_capacity(m);
    for (line_no, line) in content {
        if pairs.len() == m {
            return Err(syntax(line_no, "unexpected content after edge list"));
        }
        pairs.push(parse_pair(line_no, line)?);
    }
    if pairs.len() != m {
        return Err(ParseError::EdgeCount { expected: m, found: pairs.len() });
    }
    Ok(Graph::build(n, pairs)?)
}

/// Serializes a graph in the edge-list format, edges in canonical order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.order(), g.size()).unwrap();
    for e in g.edges() {
        writeln!(out, "{} {}", e.u(), e.v()).unwrap();
    }
    out
}

/// Edge-list serialization of a middle graph, followed by comment lines
/// naming each vertex (`v<i>` for originals, `m<i>_<j>` for edge vertices).
pub fn middle_to_edge_list(mg: &MiddleGraph) -> String {
    let mut out = to_edge_list(mg.graph());
    for v in mg.graph().vertices() {
        writeln!(out, "# {}: {}", v, mg.label(v)).unwrap();
    }
    out
}

fn render_dot(g: &Graph, label: &dyn Fn(usize) -> String) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.isolated_vertices() {
        writeln!(out, "  {};", label(v)).unwrap();
    }
    for e in g.edges() {
        writeln!(out, "  {} -- {};", label(e.u()), label(e.v())).unwrap();
    }
    out.push_str("}\n");
    out
}

/// DOT export with vertices named `v<i>`.
pub fn to_dot(g: &Graph) -> String {
    render_dot(g, &|v| format!("v{v}"))
}

/// DOT export of a middle graph with provenance labels.
pub fn middle_to_dot(mg: &MiddleGraph) -> String {
    render_dot(mg.graph(), &|v| mg.label(v))
}
