//! Exact spanning k-tree decisions (spanning trees with maximum degree at
//! most k) and the component-count sufficient condition.
//!
//! The search grows a tree from the highest-degree vertex and branches on a
//! single frontier edge at a time: either the edge joins the tree or it is
//! forbidden for the rest of that branch. Each spanning tree is reachable by
//! exactly one branch, so an exhausted search is a proof of absence.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph, VertexSet};

/// Order cap for [`has_spanning_ktree`].
pub const MAX_KTREE_ORDER: usize = 16;
/// Order cap for [`find_win_violation`].
pub const MAX_WIN_ORDER: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Outcome {
    Yes,
    No,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTreeVerdict {
    pub outcome: Outcome,
    /// Witness tree, present iff the outcome is `Yes`.
    pub tree_edges: Option<Vec<(usize, usize)>>,
    /// For `No`: a set `S` with `ω(G - S) >= (k-2)|S| + 3`, when one exists.
    pub win_violation: Option<VertexSet>,
    /// Branch nodes visited.
    pub nodes: u64,
}

impl KTreeVerdict {
    pub fn is_yes(&self) -> bool {
        self.outcome == Outcome::Yes
    }
}

struct Search<'a> {
    g: &'a Graph,
    all: u64,
    /// Vertex order used to pick parents: descending degree, then index.
    parent_rank: Vec<usize>,
    reached: u64,
    budget: Vec<usize>,
    forbidden: Vec<u64>,
    edges: Vec<(usize, usize)>,
    nodes: u64,
}

impl Search<'_> {
    fn usable_parents(&self, u: usize) -> u64 {
        let mut open = 0u64;
        for w in Bits(self.reached) {
            if self.budget[w] > 0 {
                open |= 1 << w;
            }
        }
        self.g.neighbors(u) & open & !self.forbidden[u]
    }

    /// False when some unreached vertex can no longer be connected, or when a
    /// reached vertex is the only option for more leaves than it can take.
    fn feasible(&self) -> bool {
        let unreached = self.all & !self.reached;
        let mut seen = 0u64;
        let mut forced = vec![0usize; self.g.order()];
        for u in Bits(unreached) {
            let parents = self.usable_parents(u);
            if parents != 0 {
                seen |= 1 << u;
            }
            if self.g.neighbors(u) & unreached == 0 {
                match parents.count_ones() {
                    0 => return false,
                    1 => {
                        let w = parents.trailing_zeros() as usize;
                        forced[w] += 1;
                        if forced[w] > self.budget[w] {
                            return false;
                        }
                    }
                    _ => {}
                }
            }
        }
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in Bits(frontier) {
                next |= self.g.neighbors(v);
            }
            next &= unreached & !seen;
            seen |= next;
            frontier = next;
        }
        seen == unreached
    }

    fn run(&mut self) -> bool {
        self.nodes += 1;
        if self.reached == self.all {
            return true;
        }
        if !self.feasible() {
            return false;
        }
        // most constrained frontier vertex first
        let unreached = self.all & !self.reached;
        let Some((u, parents)) = Bits(unreached)
            .map(|u| (u, self.usable_parents(u)))
            .filter(|&(_, p)| p != 0)
            .min_by_key(|&(u, p)| (p.count_ones(), u))
        else {
            return false;
        };
        let w = Bits(parents)
            .min_by_key(|&w| self.parent_rank[w])
            .expect("nonempty parent set");

        self.reached |= 1 << u;
        self.budget[w] -= 1;
        self.budget[u] -= 1;
        self.edges.push((w.min(u), w.max(u)));
        if self.run() {
            return true;
        }
        self.edges.pop();
        self.budget[u] += 1;
        self.budget[w] += 1;
        self.reached &= !(1 << u);

        self.forbidden[u] |= 1 << w;
        self.forbidden[w] |= 1 << u;
        let found = self.run();
        self.forbidden[u] &= !(1 << w);
        self.forbidden[w] &= !(1 << u);
        found
    }
}

fn check_input(g: &Graph, k: usize, cap: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidParams(format!("k must be at least 2, got {k}")));
    }
    if g.order() > cap {
        return Err(Error::OrderTooLarge {
            n: g.order(),
            max: cap,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Decides whether `g` has a spanning tree with maximum degree at most `k`.
/// A `No` answer comes from an exhausted search and carries a component
/// condition violator when one exists.
pub fn has_spanning_ktree(g: &Graph, k: usize) -> Result<KTreeVerdict> {
    check_input(g, k, MAX_KTREE_ORDER)?;
    let n = g.order();
    let mut by_rank: Vec<usize> = (0..n).collect();
    by_rank.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut parent_rank = vec![0; n];
    for (r, &v) in by_rank.iter().enumerate() {
        parent_rank[v] = r;
    }
    let root = by_rank[0];
    let mut search = Search {
        g,
        all: g.vertex_mask(),
        parent_rank,
        reached: 1 << root,
        budget: vec![k; n],
        forbidden: vec![0; n],
        edges: Vec::with_capacity(n.saturating_sub(1)),
        nodes: 0,
    };
    if search.run() {
        let mut edges = search.edges;
        edges.sort_unstable();
        Ok(KTreeVerdict {
            outcome: Outcome::Yes,
            tree_edges: Some(edges),
            win_violation: None,
            nodes: search.nodes,
        })
    } else {
        Ok(KTreeVerdict {
            outcome: Outcome::No,
            tree_edges: None,
            win_violation: find_win_violation(g, k)?,
            nodes: search.nodes,
        })
    }
}

/// True iff `edges` is a spanning tree of `g` with every degree at most `k`.
pub fn verify_tree_certificate(g: &Graph, k: usize, edges: &[(usize, usize)]) -> bool {
    let n = g.order();
    if edges.len() + 1 != n {
        return false;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut degree = vec![0usize; n];
    for &(u, v) in edges {
        if u >= n || v >= n || !g.has_edge(u, v) {
            return false;
        }
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
        degree[u] += 1;
        degree[v] += 1;
    }
    // n - 1 edges without a cycle span a tree
    degree.iter().all(|&d| d <= k)
}

/// Steps through the `size`-subsets of `0..n` in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let size = c.len();
    for i in (0..size).rev() {
        if c[i] < n - size + i {
            c[i] += 1;
            for j in i + 1..size {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Smallest (then lexicographically least) nonempty `S` with
/// `ω(G - S) >= (k-2)|S| + 3`, or `None` when `g` meets the condition.
pub fn find_win_violation(g: &Graph, k: usize) -> Result<Option<VertexSet>> {
    check_input(g, k, MAX_WIN_ORDER)?;
    let n = g.order();
    for size in 1..n {
        let need = (k - 2) * size + 3;
        // ω(G - S) <= n - |S|, and the gap only widens with |S|
        if n - size < need {
            break;
        }
        let mut c: Vec<usize> = (0..size).collect();
        loop {
            let mask = c.iter().fold(0u64, |m, &v| m | 1 << v);
            if g.components_within(g.vertex_mask() & !mask) >= need {
                return Ok(Some(VertexSet::from_mask(mask)));
            }
            if !next_combination(&mut c, n) {
                break;
            }
        }
    }
    Ok(None)
}
