//! The graph6 text format, short form only (1 <= n <= 62).
//!
//! Header byte `n + 63`, then the strict upper triangle in pair order
//! (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, most significant bit
//! first, zero padded, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable in the short form.
pub const MAX_GRAPH6_ORDER: usize = 62;

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let bytes = line.as_bytes();
    let Some(&header) = bytes.first() else {
        return Err(err(0, "empty input"));
    };
    if !(63..=126).contains(&header) {
        return Err(err(0, format!("header byte {header} outside [63, 126]")));
    }
    if header == 126 {
        return Err(err(0, "orders above 62 are not supported"));
    }
    let n = (header - 63) as usize;
    if n == 0 {
        return Err(err(0, "order 0"));
    }
    let expected = body_len(n);
    let body = &bytes[1..];
    if body.len() != expected {
        return Err(err(
            1 + body.len().min(expected),
            format!("expected {expected} body bytes for n = {n}, found {}", body.len()),
        ));
    }
    if let Some(i) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(1 + i, format!("byte {} outside [63, 126]", body[i])));
    }
    let total = n * (n - 1) / 2;
    let bit = |t: usize| (body[t / 6] - 63) >> (5 - t % 6) & 1 == 1;
    if let Some(t) = (total..expected * 6).find(|&t| bit(t)) {
        return Err(err(1 + t / 6, "nonzero padding bit"));
    }
    let mut edges = Vec::new();
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(t) {
                edges.push((i, j));
            }
            t += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::OrderTooLarge {
            n,
            max: MAX_GRAPH6_ORDER,
        });
    }
    let mut body = vec![0u8; body_len(n)];
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                body[t / 6] |= 1 << (5 - t % 6);
            }
            t += 1;
        }
    }
    let mut out = String::with_capacity(1 + body.len());
    out.push((n as u8 + 63) as char);
    out.extend(body.iter().map(|b| (b + 63) as char));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2).unwrap());
        assert_eq!(parse_graph6("A?").unwrap(), Graph::empty(2).unwrap());
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4).unwrap());
        assert_eq!(write_graph6(&Graph::complete(2).unwrap()).unwrap(), "A_");
        assert_eq!(write_graph6(&Graph::empty(2).unwrap()).unwrap(), "A?");
        assert_eq!(write_graph6(&Graph::complete(4).unwrap()).unwrap(), "C~");
        assert_eq!(write_graph6(&Graph::complete(1).unwrap()).unwrap(), "@");
    }

    #[test]
    fn matches_petgraph_reference_string() {
        // a-c, a-e, b-d, d-e on five vertices
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g).unwrap(), "DQc");
        assert_eq!(parse_graph6("DQc\n").unwrap(), g);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6("A"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("A__"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(parse_graph6("C~ "), Err(Error::Graph6 { .. })));
        assert!(matches!(parse_graph6("B\x20"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("~??"), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6("?"), Err(Error::Graph6 { offset: 0, .. })));
        // K2 has one pair bit; 'o' sets a padding bit too
        assert!(matches!(parse_graph6("Ao"), Err(Error::Graph6 { offset: 1, .. })));
    }

    #[test]
    fn size_limit() {
        assert!(write_graph6(&Graph::complete(62).unwrap()).is_ok());
        assert!(write_graph6(&Graph::complete(63).unwrap()).is_err());
        let g = Graph::path(62).unwrap();
        assert_eq!(parse_graph6(&write_graph6(&g).unwrap()).unwrap(), g);
    }
}
