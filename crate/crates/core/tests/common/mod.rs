//! Brute-force helpers shared by the integration test targets.
#![allow(dead_code)]

use dktree::Graph;

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Adjacency as a bit string over `pairs(n)`.
pub fn bits(g: &Graph) -> u32 {
    pairs(g.order())
        .iter()
        .enumerate()
        .filter(|(_, &(i, j))| g.has_edge(i, j))
        .fold(0, |m, (b, _)| m | 1 << b)
}

pub fn from_bits(n: usize, m: u32) -> Graph {
    let edges: Vec<_> = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(b, _)| m >> b & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Smallest relabelled bit string, and the number of automorphisms.
pub fn brute_form(g: &Graph, perms: &[Vec<usize>]) -> (u32, usize) {
    let own = bits(g);
    let mut best = u32::MAX;
    let mut aut = 0;
    for p in perms {
        let b = bits(&g.relabel(p).unwrap());
        best = best.min(b);
        if b == own {
            aut += 1;
        }
    }
    (best, aut)
}

pub fn connected_by_search(n: usize, m: u32) -> bool {
    let ps = pairs(n);
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for (b, &(i, j)) in ps.iter().enumerate() {
            if m >> b & 1 == 1 && (i == v || j == v) {
                let w = if i == v { j } else { i };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Any `n - 1` edges forming a spanning tree with all degrees at most `k`.
pub fn brute_spanning_ktree(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if n == 1 {
        return true;
    }
    let edges: Vec<(usize, usize)> = pairs(n).into_iter().filter(|&(i, j)| g.has_edge(i, j)).collect();
    let m = edges.len();
    (0u32..1 << m).filter(|s| s.count_ones() as usize == n - 1).any(|s| {
        let mut comp: Vec<usize> = (0..n).collect();
        let mut deg = vec![0; n];
        for (b, &(i, j)) in edges.iter().enumerate() {
            if s >> b & 1 == 1 {
                deg[i] += 1;
                deg[j] += 1;
                let (ci, cj) = (comp[i], comp[j]);
                if ci == cj {
                    return false;
                }
                for c in comp.iter_mut() {
                    if *c == cj {
                        *c = ci;
                    }
                }
            }
        }
        deg.iter().all(|&d| d <= k)
    })
}

