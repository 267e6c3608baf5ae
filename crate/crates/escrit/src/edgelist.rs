//! Edge-list text: a header line `n m`, then `m` lines `u v` with 0-based
//! vertices. Blank lines are ignored.

use escrit_core::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("edge list is empty")]
    Empty,
    #[error("line {line}: expected `n m`, found `{text}`")]
    BadHeader { line: usize, text: String },
    #[error("line {line}: expected `u v`, found `{text}`")]
    BadEdge { line: usize, text: String },
    #[error("header declares {declared} edges but {found} follow")]
    EdgeCount { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn two_numbers(text: &str) -> Option<(usize, usize)> {
    let mut it = text.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Some((a, b)),
        _ => None,
    }
}

/// True when the first non-blank line looks like an edge-list header.
pub fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .find(|l| !l.trim().is_empty())
        .is_some_and(|l| two_numbers(l).is_some())
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or(EdgeListError::Empty)?;
    let (n, m) = two_numbers(header).ok_or_else(|| EdgeListError::BadHeader {
        line,
        text: header.to_string(),
    })?;
    let pairs = lines
        .map(|(line, l)| {
            two_numbers(l).ok_or_else(|| EdgeListError::BadEdge {
                line,
                text: l.to_string(),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    if pairs.len() != m {
        return Err(EdgeListError::EdgeCount {
            declared: m,
            found: pairs.len(),
        });
    }
    Ok(Graph::from_edge_list(n, pairs)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}
