//! Graph input for the command line: a graph6 string, an edge-list file, or
//! stdin holding either format.

use std::io::Read;
use std::path::{Path, PathBuf};

use escrit_core::graph6::Graph6Error;
use escrit_core::{parse_graph6, Graph};
use thiserror::Error;

use crate::edgelist::{looks_like_edge_list, parse_edge_list, EdgeListError};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("invalid graph6: {0}")]
    Graph6(#[from] Graph6Error),
    #[error("invalid edge list: {0}")]
    EdgeList(#[from] EdgeListError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("no graph given on stdin")]
    NoInput,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSource {
    Graph6(String),
    EdgeFile(PathBuf),
    Stdin,
}

pub fn read_to_string(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Stdin text: an edge list if it starts with an `n m` header, otherwise
/// one graph6 line (a `>>graph6<<` header is allowed).
pub fn parse_graph_text(text: &str) -> Result<Graph, InputError> {
    if looks_like_edge_list(text) {
        return Ok(parse_edge_list(text)?);
    }
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or(InputError::NoInput)?;
    Ok(parse_graph6(line)?)
}

pub fn read_graph(source: &GraphSource, stdin: &mut dyn Read) -> Result<Graph, InputError> {
    match source {
        GraphSource::Graph6(s) => Ok(parse_graph6(s.trim())?),
        GraphSource::EdgeFile(path) => Ok(parse_edge_list(&read_to_string(path)?)?),
        GraphSource::Stdin => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|source| InputError::Io {
                    path: "stdin".into(),
                    source,
                })?;
            parse_graph_text(&text)
        }
    }
}

/// Non-blank lines of a graph6 stream.
pub fn graph6_lines(text: &str) -> Vec<&str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stdin_formats() {
        let a = parse_graph_text("Bw\n").unwrap();
        let b = parse_graph_text("3 3\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!(a, b);
        assert!(matches!(parse_graph_text("  \n"), Err(InputError::NoInput)));
        assert!(matches!(
            parse_graph_text("B\x01"),
            Err(InputError::Graph6(_))
        ));
    }

    #[test]
    fn sources() {
        let mut empty: &[u8] = b"";
        let g = read_graph(&GraphSource::Graph6("C~".into()), &mut empty).unwrap();
        assert_eq!(g.m(), 6);
        let mut stdin: &[u8] = b"Bw";
        assert_eq!(read_graph(&GraphSource::Stdin, &mut stdin).unwrap().m(), 3);
        let missing = GraphSource::EdgeFile("/nonexistent/escrit".into());
        assert!(matches!(
            read_graph(&missing, &mut empty),
            Err(InputError::Io { .. })
        ));
    }
}
