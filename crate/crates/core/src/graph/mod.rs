//! Simple undirected graphs on at most 64 vertices.
//!
//! Each vertex owns a `u64` neighbourhood mask, so set operations used by the
//! component counting and the spanning-tree search are single word ops.

mod canon;

pub use canon::{canonical_code, CanonicalCode, MAX_CANON_ORDER};

use std::fmt;

use crate::error::{Error, Result};

/// Largest order supported anywhere in the toolkit.
pub const MAX_ORDER: usize = 64;

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates over the set bits of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

/// A subset of the vertices of some graph, stored as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    /// Builds a set for a graph of order `n`, rejecting indices `>= n`.
    pub fn from_vertices(n: usize, vertices: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            mask |= 1 << v;
        }
        Ok(VertexSet(mask))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// A simple undirected graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptyGraph)
    } else if n > MAX_ORDER {
        Err(Error::OrderTooLarge { n, max: MAX_ORDER })
    } else {
        Ok(())
    }
}

impl Graph {
    /// The edgeless graph `nK1`.
    pub fn empty(n: usize) -> Result<Graph> {
        check_order(n)?;
        Ok(Graph { adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Graph> {
        check_order(n)?;
        let all = full_mask(n);
        Ok(Graph {
            adj: (0..n).map(|v| all & !(1 << v)).collect(),
        })
    }

    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// The cycle `C_n`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParams(format!("cycle needs n >= 3, got {n}")));
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges)
    }

    /// Builds a graph from an edge list. Loops are rejected; repeated edges
    /// collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::InvalidParams(format!("self-loop at vertex {u}")));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < 64 && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order())
            .flat_map(move |u| Bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.order())
    }

    /// `g1 ∪ g2`: `g1` keeps its labels, `g2` is shifted by `g1.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n1 = self.order();
        let n = n1 + other.order();
        check_order(n)?;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|m| m << n1));
        Ok(Graph { adj })
    }

    /// `g1 ∨ g2`: the disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n1 = self.order();
        let mut g = self.disjoint_union(other)?;
        let left = full_mask(n1);
        let right = g.vertex_mask() & !left;
        for v in 0..g.order() {
            g.adj[v] |= if v < n1 { right } else { left };
        }
        Ok(g)
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) || !self.has_edge(v, u) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    /// Caller guarantees `u != v`, both in range.
    pub(crate) fn add_edge_unchecked(mut self, u: usize, v: usize) -> Graph {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        self
    }

    /// The graph with an extra vertex `n` adjacent to exactly `mask`.
    pub fn add_vertex(&self, mask: u64) -> Result<Graph> {
        let n = self.order();
        check_order(n + 1)?;
        let mask = mask & self.vertex_mask();
        let mut adj = self.adj.clone();
        for v in Bits(mask) {
            adj[v] |= 1 << n;
        }
        adj.push(mask);
        Ok(Graph { adj })
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut seen = 0u64;
        if perm.len() != n {
            return Err(Error::InvalidParams("permutation length differs from order".into()));
        }
        for &p in perm {
            if p >= n || seen >> p & 1 == 1 {
                return Err(Error::InvalidParams("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        let mut adj = vec![0u64; n];
        for u in 0..n {
            for v in Bits(self.adj[u]) {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Ok(Graph { adj })
    }

    /// Vertices reachable from `start` inside `allowed` (which must contain `start`).
    #[inline]
    pub(crate) fn reach_within(&self, start: usize, allowed: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Number of connected components of `G - S`.
    pub fn components_after_removal(&self, s: VertexSet) -> usize {
        self.components_within(self.vertex_mask() & !s.mask())
    }

    pub(crate) fn components_within(&self, mut remaining: u64) -> usize {
        let mut count = 0;
        while remaining != 0 {
            let v = remaining.trailing_zeros() as usize;
            remaining &= !self.reach_within(v, remaining);
            count += 1;
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.reach_within(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> VertexSet {
        let all = self.vertex_mask();
        let mut mask = 0u64;
        for v in 0..self.order() {
            if self.adj[v] | 1 << v == all {
                mask |= 1 << v;
            }
        }
        VertexSet(mask)
    }

    /// Vertex sets of the components of `G[allowed]`, each as a mask,
    /// ordered by their lowest vertex.
    pub fn component_masks_within(&self, mut remaining: u64) -> Vec<u64> {
        let mut out = Vec::new();
        while remaining != 0 {
            let v = remaining.trailing_zeros() as usize;
            let comp = self.reach_within(v, remaining);
            remaining &= !comp;
            out.push(comp);
        }
        out
    }

    /// True when the vertices in `mask` are pairwise adjacent.
    pub fn is_clique(&self, mask: u64) -> bool {
        Bits(mask).all(|v| (self.adj[v] | 1 << v) & mask == mask)
    }
}
