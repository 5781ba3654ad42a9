//! Plain edge-list text: a header line `n m` followed by `m` lines `u v`
//! with `0 <= u < v < n`. Blank lines are ignored.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let bad = |reason: String| Error::EdgeList {
        line: lineno,
        reason,
    };
    let mut it = line.split_whitespace();
    let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
        return Err(bad(format!("expected two integers, found {line:?}")));
    };
    let a = a.parse().map_err(|_| bad(format!("not a natural number: {a:?}")))?;
    let b = b.parse().map_err(|_| bad(format!("not a natural number: {b:?}")))?;
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let Some((hline, header)) = lines.next() else {
        return Err(Error::EdgeList {
            line: 1,
            reason: "missing header line".into(),
        });
    };
    let (n, m) = parse_pair(header, hline)?;
    let mut g = Graph::empty(n).map_err(|e| Error::EdgeList {
        line: hline,
        reason: e.to_string(),
    })?;
    let mut seen = 0;
    for (lineno, line) in lines {
        let (u, v) = parse_pair(line, lineno)?;
        let bad = |reason: &str| Error::EdgeList {
            line: lineno,
            reason: reason.into(),
        };
        if u == v {
            return Err(bad("self-loop"));
        }
        if u > v {
            return Err(bad("edge must be written as u v with u < v"));
        }
        if v >= n {
            return Err(bad("vertex index out of range"));
        }
        if g.has_edge(u, v) {
            return Err(bad("duplicate edge"));
        }
        if seen == m {
            return Err(bad("more edge lines than declared"));
        }
        g = g.add_edge_unchecked(u, v);
        seen += 1;
    }
    if seen != m {
        return Err(Error::EdgeList {
            line: text.lines().count().max(1),
            reason: format!("header declares {m} edges, found {seen}"),
        });
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
