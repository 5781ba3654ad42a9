//! Canonical labelling by colour refinement plus individualisation.
//!
//! The search tree individualises one vertex of the first smallest
//! non-singleton cell at a time and refines to an equitable ordered
//! partition. Every leaf is a labelling; the canonical code is the minimum
//! upper-triangle bit string over all leaves. Vertices of a cell that are
//! twins of an already explored vertex are skipped, since swapping two twins
//! is an automorphism fixing the current partition.

use std::fmt;

use super::Graph;
use crate::error::{Error, Result};
use crate::io::graph6;

/// Largest order accepted by [`canonical_code`].
pub const MAX_CANON_ORDER: usize = 12;

/// Isomorphism-class key: the graph6 text of the canonical relabelling.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The canonically labelled representative.
    pub fn to_graph(&self) -> Graph {
        graph6::parse_graph6(&self.0).expect("canonical codes are valid graph6")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

type Cells = Vec<Vec<usize>>;

/// Splits cells until every vertex in a cell has the same number of
/// neighbours in every other cell. New sub-cells are ordered by that count,
/// which keeps the result independent of vertex labels.
fn refine(g: &Graph, cells: &mut Cells) {
    let mut changed = true;
    while changed {
        changed = false;
        let mut splitter = 0;
        while splitter < cells.len() {
            let smask: u64 = cells[splitter].iter().fold(0, |m, &v| m | 1 << v);
            let mut next: Cells = Vec::with_capacity(cells.len());
            let mut split_here = false;
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell
                    .iter()
                    .map(|&v| ((g.neighbors(v) & smask).count_ones(), v))
                    .collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
                if keyed[0].0 != keyed[keyed.len() - 1].0 {
                    split_here = true;
                }
            }
            *cells = next;
            if split_here {
                changed = true;
            }
            splitter += 1;
        }
    }
}

/// Upper-triangle bits in graph6 pair order, first pair in the highest bit,
/// so numeric order on the result is lexicographic order on the bit string.
fn leaf_code(g: &Graph, order: &[usize]) -> u128 {
    let n = order.len();
    let total = n * (n - 1) / 2;
    let mut code = 0u128;
    let mut t = 0;
    for j in 1..n {
        let row = g.neighbors(order[j]);
        for &vi in &order[..j] {
            if row >> vi & 1 == 1 {
                code |= 1u128 << (total - 1 - t);
            }
            t += 1;
        }
    }
    code
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u) & !(1 << v) == g.neighbors(v) & !(1 << u)
}

fn search(g: &Graph, mut cells: Cells, best: &mut Option<(u128, Vec<usize>)>) {
    refine(g, &mut cells);
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i);
    let Some(target) = target else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = leaf_code(g, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };
    let cell = cells[target].clone();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(vec![v]);
        next.push(cell.iter().copied().filter(|&u| u != v).collect());
        next.extend_from_slice(&cells[target + 1..]);
        search(g, next, best);
    }
}

/// Canonical relabelling: returns `perm` with `perm[v]` the new label of `v`.
pub fn canonical_labelling(g: &Graph) -> Result<Vec<usize>> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::OrderTooLarge {
            n,
            max: MAX_CANON_ORDER,
        });
    }
    if n == 1 {
        return Ok(vec![0]);
    }
    let mut best = None;
    search(g, vec![(0..n).collect()], &mut best);
    let (_, order) = best.expect("search visits at least one leaf");
    let mut perm = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    Ok(perm)
}

/// Code shared by exactly the graphs isomorphic to `g`. Orders above
/// [`MAX_CANON_ORDER`] are refused.
pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    let perm = canonical_labelling(g)?;
    let canon = g.relabel(&perm)?;
    Ok(CanonicalCode(graph6::write_graph6(&canon)?))
}
