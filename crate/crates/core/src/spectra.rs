//! Distance matrices and their spectra.
//!
//! The spectral radius comes from power iteration started at the all-ones
//! vector. For a connected graph the distance matrix is nonnegative and
//! irreducible, so the iterate stays positive and converges to the Perron
//! direction. The full spectrum uses cyclic Jacobi rotations and is meant
//! for diagnostics.

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

/// Stopping tolerance for [`lambda1`], relative to the eigenvalue estimate.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;
/// Tolerance used when re-resolving near ties.
pub const TIGHT_TOLERANCE: f64 = 1e-13;
pub const MAX_ITERATIONS: usize = 100_000;

const JACOBI_THRESHOLD: f64 = 1e-12;
const JACOBI_MAX_SWEEPS: usize = 100;

/// Shortest-path hop counts of a connected graph, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistMatrix {
    n: usize,
    entries: Vec<u16>,
}

impl DistMatrix {
    /// Wraps raw entries, checking symmetry, zero diagonal, positive
    /// off-diagonal entries and the triangle inequality.
    pub fn from_entries(n: usize, entries: Vec<u16>) -> Result<DistMatrix> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::InvalidParams(format!(
                "expected {} entries for order {n}",
                n * n
            )));
        }
        let at = |i: usize, j: usize| entries[i * n + j];
        for i in 0..n {
            if at(i, i) != 0 {
                return Err(Error::InvalidParams(format!("nonzero diagonal at {i}")));
            }
            for j in 0..n {
                if i != j && (at(i, j) == 0 || at(i, j) != at(j, i)) {
                    return Err(Error::InvalidParams(format!(
                        "entry ({i}, {j}) breaks symmetry or positivity"
                    )));
                }
                for k in 0..n {
                    if at(i, k) > at(i, j) + at(j, k) {
                        return Err(Error::InvalidParams(format!(
                            "triangle inequality fails for ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        Ok(DistMatrix { n, entries })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u16 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u16] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    /// Transmission of vertex `i` (its row sum).
    pub fn row_sum(&self, i: usize) -> u64 {
        self.row(i).iter().map(|&d| d as u64).sum()
    }

    pub fn diameter(&self) -> u16 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|&d| d as f64).collect()
    }

    fn mul(&self, x: &[f64], out: &mut [f64]) {
        for (i, o) in out.iter_mut().enumerate() {
            *o = self
                .row(i)
                .iter()
                .zip(x)
                .map(|(&d, &xv)| d as f64 * xv)
                .sum();
        }
    }
}

/// Hop distances by one bitset breadth-first search per source.
pub fn all_pairs_distances(g: &Graph) -> Result<DistMatrix> {
    let n = g.order();
    let all = g.vertex_mask();
    let mut entries = vec![0u16; n * n];
    for s in 0..n {
        let mut seen = 1u64 << s;
        let mut frontier = seen;
        let mut depth = 0u16;
        while frontier != 0 {
            depth += 1;
            let mut next = 0u64;
            for v in Bits(frontier) {
                next |= g.neighbors(v);
            }
            next &= !seen;
            for v in Bits(next) {
                entries[s * n + v] = depth;
            }
            seen |= next;
            frontier = next;
        }
        if seen != all {
            return Err(Error::Disconnected);
        }
    }
    Ok(DistMatrix { n, entries })
}

/// Sum of distances over unordered pairs.
pub fn wiener(d: &DistMatrix) -> u64 {
    let n = d.order();
    (0..n)
        .map(|i| d.row(i)[i + 1..].iter().map(|&x| x as u64).sum::<u64>())
        .sum()
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectralResult {
    pub lambda1: f64,
    /// Unit-norm Perron vector, entries strictly positive.
    pub perron: Vec<f64>,
    pub iterations: usize,
    /// Max-norm of `D x - lambda1 x`.
    pub residual: f64,
}

/// Spectral radius and Perron vector at [`DEFAULT_TOLERANCE`].
pub fn lambda1(d: &DistMatrix) -> Result<SpectralResult> {
    lambda1_with_tolerance(d, DEFAULT_TOLERANCE)
}

/// Power iteration from the all-ones vector with a Rayleigh-quotient
/// estimate. Stops once the residual max-norm drops to `tol * estimate`.
pub fn lambda1_with_tolerance(d: &DistMatrix, tol: f64) -> Result<SpectralResult> {
    let n = d.order();
    if n < 2 {
        return Err(Error::InvalidParams(
            "spectral radius needs at least two vertices".into(),
        ));
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    let mut estimate = 0.0;
    let mut residual = f64::INFINITY;
    for it in 1..=MAX_ITERATIONS {
        d.mul(&x, &mut y);
        estimate = x.iter().zip(&y).map(|(a, b)| a * b).sum::<f64>();
        residual = x
            .iter()
            .zip(&y)
            .map(|(a, b)| (b - estimate * a).abs())
            .fold(0.0, f64::max);
        if residual <= tol * estimate {
            return Ok(SpectralResult {
                lambda1: estimate,
                perron: x,
                iterations: it,
                residual,
            });
        }
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
    }
    Err(Error::NoConvergence {
        estimate,
        residual,
        iterations: MAX_ITERATIONS,
    })
}

/// Convenience: connected graph to spectral radius.
pub fn spectral_radius(g: &Graph) -> Result<f64> {
    Ok(lambda1(&all_pairs_distances(g)?)?.lambda1)
}

pub fn spectral_radius_with_tolerance(g: &Graph, tol: f64) -> Result<f64> {
    Ok(lambda1_with_tolerance(&all_pairs_distances(g)?, tol)?.lambda1)
}

/// Eigenvalues of a dense symmetric matrix (row-major), nonincreasing.
pub fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize) -> Result<Vec<f64>> {
    assert_eq!(a.len(), n * n);
    let scale = a.iter().map(|v| v * v).sum::<f64>().sqrt().max(1.0);
    let off = |a: &[f64]| {
        let mut s = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                s += 2.0 * a[p * n + q] * a[p * n + q];
            }
        }
        s.sqrt()
    };
    let mut sweeps = 0;
    while off(&a) > JACOBI_THRESHOLD * scale {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence {
                estimate: a[0],
                residual: off(&a),
                iterations: sweeps,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(|x, y| y.total_cmp(x));
    Ok(eig)
}

/// All distance eigenvalues, nonincreasing.
pub fn full_spectrum(d: &DistMatrix) -> Result<Vec<f64>> {
    symmetric_eigenvalues(d.to_f64(), d.order())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn distances_of_small_graphs() {
        let k4 = all_pairs_distances(&Graph::complete(4).unwrap()).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(k4.get(i, j), u16::from(i != j));
            }
        }
        let p3 = all_pairs_distances(&Graph::path(3).unwrap()).unwrap();
        assert_eq!(p3.row(0), &[0, 1, 2]);
        assert_eq!(p3.row(1), &[1, 0, 1]);
        assert_eq!(p3.row(2), &[2, 1, 0]);
        assert_eq!(
            all_pairs_distances(&Graph::empty(2).unwrap()),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn wiener_values() {
        let w = |g: Graph| wiener(&all_pairs_distances(&g).unwrap());
        assert_eq!(w(Graph::complete(4).unwrap()), 6);
        assert_eq!(w(Graph::path(3).unwrap()), 4);
        // sum of |i - j| over 0 <= i < j <= 4
        let oracle: u64 = (0..5u64).flat_map(|i| (i + 1..5).map(move |j| j - i)).sum();
        assert_eq!(oracle, 20);
        assert_eq!(w(Graph::path(5).unwrap()), oracle);
    }

    #[test]
    fn complete_graph_radius() {
        for n in 2..9 {
            let r = lambda1(&all_pairs_distances(&Graph::complete(n).unwrap()).unwrap()).unwrap();
            assert!(close(r.lambda1, (n - 1) as f64, 1e-10));
            assert!(r.perron.iter().all(|&x| close(x, 1.0 / (n as f64).sqrt(), 1e-12)));
        }
    }

    #[test]
    fn single_vertex_is_rejected() {
        let d = all_pairs_distances(&Graph::complete(1).unwrap()).unwrap();
        assert!(lambda1(&d).is_err());
    }

    #[test]
    fn small_spectra() {
        let s = |g: Graph| full_spectrum(&all_pairs_distances(&g).unwrap()).unwrap();
        let k2 = s(Graph::complete(2).unwrap());
        assert!(close(k2[0], 1.0, 1e-12) && close(k2[1], -1.0, 1e-12));
        let k3 = s(Graph::complete(3).unwrap());
        assert!(close(k3[0], 2.0, 1e-12) && close(k3[1], -1.0, 1e-12) && close(k3[2], -1.0, 1e-12));
    }

    #[test]
    fn path_three_oracle() {
        // D(P3) has characteristic polynomial x^3 - 6x - 4 = (x + 2)(x^2 - 2x - 2),
        // so the spectrum is {1 + sqrt 3, -2, 1 - sqrt 3}.
        let d = all_pairs_distances(&Graph::path(3).unwrap()).unwrap();
        let expected = [1.0 + 3f64.sqrt(), 1.0 - 3f64.sqrt(), -2.0];
        let spec = full_spectrum(&d).unwrap();
        for (a, b) in spec.iter().zip(expected) {
            assert!(close(*a, b, 1e-9), "{spec:?}");
        }
        assert!(close(lambda1(&d).unwrap().lambda1, spec[0], 1e-9));
    }

    #[test]
    fn entries_validation() {
        assert!(DistMatrix::from_entries(2, vec![0, 1, 1, 0]).is_ok());
        assert!(DistMatrix::from_entries(2, vec![0, 1, 2, 0]).is_err());
        assert!(DistMatrix::from_entries(3, vec![0, 1, 5, 1, 0, 1, 5, 1, 0]).is_err());
        assert!(DistMatrix::from_entries(2, vec![1, 1, 1, 0]).is_err());
    }

    #[test]
    fn tight_tolerance_converges() {
        let g = Graph::cycle(9).unwrap();
        let d = all_pairs_distances(&g).unwrap();
        let r = lambda1_with_tolerance(&d, TIGHT_TOLERANCE).unwrap();
        // C9 is vertex transitive: lambda1 is the common row sum 2(1+2+3+4) = 20
        assert!(close(r.lambda1, 20.0, 1e-12));
        assert!(r.residual <= TIGHT_TOLERANCE * r.lambda1);
    }
}
