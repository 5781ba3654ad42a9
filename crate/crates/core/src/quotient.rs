//! Vertex partitions and quotient matrices of the distance matrix.
//!
//! For an equitable partition of a nonnegative matrix the quotient shares
//! its largest eigenvalue with the full matrix, which turns every split-join
//! radius into the largest root of a polynomial of degree at most three.

use crate::error::{Error, Result};
use crate::poly::{characteristic_polynomial, Poly};
use crate::spectra::DistMatrix;

const ROOT_TOLERANCE: f64 = 1e-12;

/// Ordered list of nonempty, pairwise disjoint blocks covering `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Partition> {
        let mut seen = vec![false; n];
        for (bi, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {bi} is empty")));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} out of range for order {n}"
                    )));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
        }
        Ok(Partition { n, blocks })
    }

    /// Blocks given as consecutive runs of the stated sizes; zero sizes are
    /// skipped.
    pub fn from_sizes(sizes: &[usize]) -> Result<Partition> {
        let mut blocks = Vec::new();
        let mut start = 0;
        for &s in sizes {
            if s > 0 {
                blocks.push((start..start + s).collect());
                start += s;
            }
        }
        Partition::new(start, blocks)
    }

    pub fn singletons(n: usize) -> Partition {
        Partition {
            n,
            blocks: (0..n).map(|v| vec![v]).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}

/// `r x r` matrix of average block row sums, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientMatrix {
    r: usize,
    entries: Vec<f64>,
}

impl QuotientMatrix {
    /// Rejects negative or non-square input.
    pub fn from_rows(rows: &[&[f64]]) -> Result<QuotientMatrix> {
        let r = rows.len();
        if r == 0 || rows.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidParams("quotient matrix must be square".into()));
        }
        let entries: Vec<f64> = rows.iter().flat_map(|row| row.iter().copied()).collect();
        if entries.iter().any(|&v| !(v >= 0.0)) {
            return Err(Error::InvalidParams("quotient entries must be nonnegative".into()));
        }
        Ok(QuotientMatrix { r, entries })
    }

    pub fn size(&self) -> usize {
        self.r
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.r + j]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.entries.chunks(self.r).map(<[f64]>::to_vec).collect()
    }

    pub fn characteristic_polynomial(&self) -> Poly {
        characteristic_polynomial(&self.entries, self.r)
    }

    /// Every real eigenvalue lies within the largest absolute row sum.
    fn root_bound(&self) -> f64 {
        self.entries
            .chunks(self.r)
            .map(|row| row.iter().map(|v| v.abs()).sum::<f64>())
            .fold(0.0, f64::max)
            + 1.0
    }
}

fn check_partition(d: &DistMatrix, p: &Partition) -> Result<()> {
    if p.order() != d.order() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices, matrix has order {}",
            p.order(),
            d.order()
        )));
    }
    Ok(())
}

fn block_row_sum(d: &DistMatrix, row: usize, cols: &[usize]) -> u64 {
    cols.iter().map(|&c| d.get(row, c) as u64).sum()
}

/// `b_ij` is the sum of block `(i, j)` divided by the size of block `i`.
pub fn quotient_matrix(d: &DistMatrix, p: &Partition) -> Result<QuotientMatrix> {
    check_partition(d, p)?;
    let r = p.len();
    let mut entries = Vec::with_capacity(r * r);
    for bi in p.blocks() {
        for bj in p.blocks() {
            let total: u64 = bi.iter().map(|&row| block_row_sum(d, row, bj)).sum();
            entries.push(total as f64 / bi.len() as f64);
        }
    }
    Ok(QuotientMatrix { r, entries })
}

/// True when every block of `D` has constant row sums.
pub fn is_equitable(d: &DistMatrix, p: &Partition) -> Result<bool> {
    check_partition(d, p)?;
    Ok(p.blocks().iter().all(|bi| {
        p.blocks().iter().all(|bj| {
            let first = block_row_sum(d, bi[0], bj);
            bi[1..].iter().all(|&row| block_row_sum(d, row, bj) == first)
        })
    }))
}

/// Largest real eigenvalue: closed form up to order two, Sturm isolation
/// and bisection on the characteristic polynomial beyond.
pub fn quotient_lambda1(b: &QuotientMatrix) -> f64 {
    match b.r {
        1 => b.entries[0],
        2 => {
            let tr = b.entries[0] + b.entries[3];
            let det = b.entries[0] * b.entries[3] - b.entries[1] * b.entries[2];
            // nonnegative off-diagonal entries keep the discriminant >= 0
            0.5 * (tr + (tr * tr - 4.0 * det).max(0.0).sqrt())
        }
        _ => {
            let bound = b.root_bound();
            b.characteristic_polynomial()
                .largest_real_root(-bound, bound, ROOT_TOLERANCE)
                .expect("a nonnegative matrix has a real Perron root")
        }
    }
}

/// All distinct real eigenvalues, nonincreasing.
pub fn quotient_eigenvalues(b: &QuotientMatrix) -> Vec<f64> {
    let bound = b.root_bound();
    let mut roots = b
        .characteristic_polynomial()
        .real_roots(-bound, bound, ROOT_TOLERANCE);
    roots.reverse();
    roots
}
