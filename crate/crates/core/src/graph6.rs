//! graph6 encoding of simple graphs.
//!
//! A graph6 string is a size prefix `N(n)` followed by the upper triangle of
//! the adjacency matrix, read column by column (`x(0,1) x(0,2) x(1,2)
//! x(0,3) ...`), packed six bits per printable byte (`63..=126`) and padded
//! with zeros.

use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{Edge, Graph};

pub const HEADER: &str = ">>graph6<<";

const MAX_N: usize = 68_719_476_735;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed size prefix")]
    BadSizePrefix,
    #[error("byte {byte} at position {position} is outside 63..=126")]
    CharOutOfRange { position: usize, byte: u8 },
    #[error("malformed graph6: expected {expected} adjacency bytes, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("malformed graph6: nonzero padding bits")]
    NonzeroPadding,
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and surrounding
/// whitespace are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some((position, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(63..=126).contains(&b))
    {
        return Err(Graph6Error::CharOutOfRange { position, byte });
    }
    let (n, body) = decode_size(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::LengthMismatch {
            expected,
            found: body.len(),
        });
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if bit(body, k) {
                edges.push(Edge::new(i, j));
            }
            k += 1;
        }
    }
    if (k..expected * 6).any(|p| bit(body, p)) {
        return Err(Graph6Error::NonzeroPadding);
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(n, edges))
}

#[inline]
fn bit(body: &[u8], k: usize) -> bool {
    (body[k / 6] - 63) & (0x20 >> (k % 6)) != 0
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8]), Graph6Error> {
    let word = |digits: &[u8]| {
        digits
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63))
    };
    if bytes[0] != 126 {
        return Ok((usize::from(bytes[0] - 63), &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Graph6Error::BadSizePrefix);
        }
        let n = word(&bytes[2..8]);
        if n < 258_048 {
            return Err(Graph6Error::BadSizePrefix);
        }
        return Ok((n, &bytes[8..]));
    }
    if bytes.len() < 4 {
        return Err(Graph6Error::BadSizePrefix);
    }
    let n = word(&bytes[1..4]);
    if n < 63 {
        return Err(Graph6Error::BadSizePrefix);
    }
    Ok((n, &bytes[4..]))
}

/// Encodes `g` as a graph6 string without header or newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_N, "graph too large for graph6");
    let mut out = Vec::new();
    encode_size(n, &mut out);

    let bits = n * n.saturating_sub(1) / 2;
    let mut body = alloc::vec![0u8; bits.div_ceil(6)];
    for e in g.edges() {
        let k = e.v() * (e.v() - 1) / 2 + e.u();
        body[k / 6] |= 0x20 >> (k % 6);
    }
    out.extend(body.into_iter().map(|b| b + 63));
    // Every byte is in 63..=126.
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    let push_word = |out: &mut Vec<u8>, digits: usize| {
        for d in (0..digits).rev() {
            out.push(((n >> (6 * d)) & 0x3f) as u8 + 63);
        }
    };
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        push_word(out, 3);
    } else {
        out.push(126);
        out.push(126);
        push_word(out, 6);
    }
}
