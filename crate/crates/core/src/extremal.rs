//! Extremal split-join families and the polynomials that pin down their
//! distance spectral radii.
//!
//! Every family here has the shape `K_s ∨ (K_a ∪ bK1)`:
//!
//! | family | s | a | b |
//! |---|---|---|---|
//! | `gstar(n, k)` | 1 | n-k-1 | k |
//! | `gsharp(n)` | (n-3)/3 | 0 | (2n+3)/3 |
//! | `gtilde(n, k, s)` | s | n-(k-1)s-2 | (k-2)s+2 |
//! | `gprime(n, s, t)` | s | n-s-t+1 | t-1 |
//!
//! Polynomial coefficients are built in `i128` and converted to `f64` only
//! when evaluated, so sign checks at integer points are exact.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};
use crate::poly::Poly;
use crate::quotient::Partition;

/// Parameters of `K_s ∨ (K_a ∪ bK1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SplitJoinParams {
    pub s: usize,
    pub a: usize,
    pub b: usize,
}

impl SplitJoinParams {
    pub fn new(s: usize, a: usize, b: usize) -> Result<SplitJoinParams> {
        let p = SplitJoinParams { s, a, b };
        if s == 0 {
            return Err(Error::InvalidParams("join clique needs s >= 1".into()));
        }
        if p.order() < 2 {
            return Err(Error::InvalidParams("split-join needs order >= 2".into()));
        }
        Ok(p)
    }

    pub fn order(&self) -> usize {
        self.s + self.a + self.b
    }

    /// `{S, K_a, bK1}` with empty blocks dropped, in vertex-layout order.
    pub fn block_partition(&self) -> Partition {
        Partition::from_sizes(&[self.s, self.a, self.b]).expect("sizes cover the order")
    }
}

/// `K_s ∨ (K_a ∪ bK1)` with vertices `[0, s)` the join clique, `[s, s+a)`
/// the clique part and `[s+a, n)` the singletons.
pub fn build_split_join(p: SplitJoinParams) -> Result<Graph> {
    let p = SplitJoinParams::new(p.s, p.a, p.b)?;
    clique_join(p.s, &[&[p.a][..], &vec![1; p.b]].concat())
}

/// `K_s ∨ (K_{n_1} ∪ ... ∪ K_{n_t})`; zero-sized parts are ignored.
pub fn clique_join(s: usize, parts: &[usize]) -> Result<Graph> {
    let parts: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
    let mut rest: Option<Graph> = None;
    for &p in &parts {
        let k = Graph::complete(p)?;
        rest = Some(match rest {
            None => k,
            Some(r) => r.disjoint_union(&k)?,
        });
    }
    let head = Graph::complete(s)?;
    match rest {
        None => Ok(head),
        Some(r) => head.join(&r),
    }
}

fn need(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParams(msg()))
    }
}

pub fn gstar_params(n: usize, k: usize) -> Result<SplitJoinParams> {
    need(k >= 4, || format!("G* needs k >= 4, got {k}"))?;
    need(n >= k + 2, || format!("G* needs n >= k + 2, got n = {n}, k = {k}"))?;
    SplitJoinParams::new(1, n - k - 1, k)
}

/// `K1 ∨ (K_{n-k-1} ∪ kK1)`.
pub fn gstar(n: usize, k: usize) -> Result<Graph> {
    build_split_join(gstar_params(n, k)?)
}

pub fn gsharp_params(n: usize) -> Result<SplitJoinParams> {
    need(n.is_multiple_of(3), || format!("G# is undefined for order {n}: n must be divisible by 3"))?;
    need(n >= 6, || format!("G# needs n >= 6, got {n}"))?;
    SplitJoinParams::new((n - 3) / 3, 0, (2 * n + 3) / 3)
}

/// `K_{(n-3)/3} ∨ ((2n+3)/3)K1`, defined only when `3 | n`.
pub fn gsharp(n: usize) -> Result<Graph> {
    build_split_join(gsharp_params(n)?)
}

pub fn gtilde_params(n: usize, k: usize, s: usize) -> Result<SplitJoinParams> {
    need(k >= 2 && s >= 1, || format!("G~ needs k >= 2 and s >= 1, got k = {k}, s = {s}"))?;
    need(n >= (k - 1) * s + 3, || {
        format!("G~ needs n >= (k-1)s + 3, got n = {n}, k = {k}, s = {s}")
    })?;
    SplitJoinParams::new(s, n - (k - 1) * s - 2, (k - 2) * s + 2)
}

/// `K_s ∨ (K_{n-(k-1)s-2} ∪ ((k-2)s+2)K1)`.
pub fn gtilde(n: usize, k: usize, s: usize) -> Result<Graph> {
    build_split_join(gtilde_params(n, k, s)?)
}

pub fn gprime_params(n: usize, s: usize, t: usize) -> Result<SplitJoinParams> {
    need(s >= 1 && t >= 1, || format!("G' needs s, t >= 1, got s = {s}, t = {t}"))?;
    need(n >= s + t, || format!("G' needs n >= s + t, got n = {n}, s = {s}, t = {t}"))?;
    SplitJoinParams::new(s, n - s - t + 1, t - 1)
}

/// `K_s ∨ (K_{n-s-t+1} ∪ (t-1)K1)`.
pub fn gprime(n: usize, s: usize, t: usize) -> Result<Graph> {
    build_split_join(gprime_params(n, s, t)?)
}

/// Shape of a clique join: the universal vertex count and the sorted
/// (descending) sizes of the cliques left after removing them. `None` when
/// `g` is not of the form `K_s ∨ (K_{n_1} ∪ ... ∪ K_{n_t})` with `t >= 2`.
///
/// For `t >= 2` no vertex outside the join clique is universal, so the shape
/// is an isomorphism invariant that determines the graph.
pub fn clique_join_shape(g: &Graph) -> Option<(usize, Vec<usize>)> {
    let universal = g.universal_vertices().mask();
    let rest = g.vertex_mask() & !universal;
    let comps = g.component_masks_within(rest);
    if comps.len() < 2 || !comps.iter().all(|&c| g.is_clique(c)) {
        return None;
    }
    let mut sizes: Vec<usize> = comps.iter().map(|c| c.count_ones() as usize).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Some((universal.count_ones() as usize, sizes))
}

/// Exact test for `g ≅ K_s ∨ (K_a ∪ bK1)` with at least two components
/// below the join.
pub fn is_split_join(g: &Graph, p: SplitJoinParams) -> bool {
    let mut sizes = vec![p.a];
    sizes.extend(std::iter::repeat_n(1, p.b));
    sizes.retain(|&x| x > 0);
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    g.order() == p.order() && clique_join_shape(g) == Some((p.s, sizes))
}

/// Which closed-form polynomial to evaluate, with its parameters. The
/// variable is `x` for `F`, `G`, `Phi`; `theta` for `P`; `n` for `H` and
/// `HLine`; `s` for `Q` and `R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum PolyId {
    /// Characteristic polynomial of the three-block quotient of `D(G~)`.
    F { n: i64, k: i64, s: i64 },
    /// `F` at `s = 1`, i.e. the polynomial whose largest root is `λ1(D(G*))`.
    G { n: i64, k: i64 },
    /// Characteristic polynomial of the two-block quotient of `D(G#)`.
    Phi { n: i64 },
    /// `(F - G) / (s - 1)` as a polynomial in `theta`.
    P { n: i64, k: i64, s: i64 },
    /// `P` evaluated at `theta = n + k - 1`, as a polynomial in `n`.
    H { k: i64, s: i64 },
    /// `H` on the line `n = (k-1)s + 3`, as a polynomial in `n`.
    HLine { k: i64 },
    /// `H` at `n = (k-1)s + 4`, as a polynomial in `s`.
    Q { k: i64 },
    /// `H` at `n = (k-1)s + 3`, as a polynomial in `s`.
    R { k: i64 },
}

impl fmt::Display for PolyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PolyId::F { n, k, s } => write!(f, "f[n={n},k={k},s={s}]"),
            PolyId::G { n, k } => write!(f, "g[n={n},k={k}]"),
            PolyId::Phi { n } => write!(f, "phi[n={n}]"),
            PolyId::P { n, k, s } => write!(f, "p[n={n},k={k},s={s}]"),
            PolyId::H { k, s } => write!(f, "h[k={k},s={s}]"),
            PolyId::HLine { k } => write!(f, "h_line[k={k}]"),
            PolyId::Q { k } => write!(f, "q[k={k}]"),
            PolyId::R { k } => write!(f, "r[k={k}]"),
        }
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Polynomial with integer numerator coefficients over a positive common
/// denominator. `num[i]` multiplies the `i`-th power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    pub num: Vec<i128>,
    pub den: i128,
}

impl IntPoly {
    fn new(num: Vec<i128>, den: i128) -> IntPoly {
        assert!(den > 0);
        let g = num.iter().fold(den, |g, &c| gcd(g, c));
        let g = g.max(1);
        let mut num: Vec<i128> = num.iter().map(|c| c / g).collect();
        while num.len() > 1 && *num.last().unwrap() == 0 {
            num.pop();
        }
        IntPoly { num, den: den / g }
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.num.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64) / self.den as f64
    }

    /// Exact value at an integer point as `(numerator, denominator)`.
    pub fn eval_exact(&self, x: i128) -> (i128, i128) {
        let v = self.num.iter().rev().fold(0i128, |acc, &c| acc * x + c);
        (v, self.den)
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(self.num.iter().map(|&c| c as f64 / self.den as f64).collect())
    }
}

impl PolyId {
    fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidParams(format!("{self}: {why}")));
        match *self {
            PolyId::F { n, k, s } | PolyId::P { n, k, s } => {
                if n < 1 || k < 2 || s < 1 {
                    return bad("needs n >= 1, k >= 2, s >= 1");
                }
            }
            PolyId::G { n, k } => {
                if n < 1 || k < 2 {
                    return bad("needs n >= 1, k >= 2");
                }
            }
            PolyId::Phi { n } => {
                if n < 1 {
                    return bad("needs n >= 1");
                }
            }
            PolyId::H { k, s } => {
                if k < 2 || s < 1 {
                    return bad("needs k >= 2, s >= 1");
                }
            }
            PolyId::HLine { k } | PolyId::Q { k } | PolyId::R { k } => {
                if k < 2 {
                    return bad("needs k >= 2");
                }
            }
        }
        Ok(())
    }

    /// Exact coefficients.
    pub fn coefficients(&self) -> Result<IntPoly> {
        self.validate()?;
        let c = |v: i64| v as i128;
        Ok(match *self {
            PolyId::F { n, k, s } => {
                let (n, k, s) = (c(n), c(k), c(s));
                IntPoly::new(
                    vec![
                        (k - 2) * s * s * n - 2 * (k - 3) * s * n - 6 * n
                            - (k - 2) * (k - 1) * s * s * s
                            + (2 * k * k - 9 * k + 8) * s * s
                            + 2 * (4 * k - 7) * s
                            + 10,
                        -(2 * (k - 2) * s * n + 7 * n
                            - (k - 2) * (2 * k - 1) * s * s
                            - (7 * k - 8) * s
                            - 11),
                        -(n + (k - 2) * s - 2),
                        1,
                    ],
                    1,
                )
            }
            PolyId::G { n, k } => {
                let (n, k) = (c(n), c(k));
                IntPoly::new(
                    vec![
                        -(k + 2) * n + k * k + 2 * k + 2,
                        -((2 * k + 3) * n - 2 * k * k - 2 * k - 5),
                        -(n + k - 4),
                        1,
                    ],
                    1,
                )
            }
            PolyId::Phi { n } => {
                let n = c(n);
                IntPoly::new(vec![2 * n * n - 21 * n + 9, -3 * (5 * n - 6), 9], 9)
            }
            PolyId::P { n, k, s } => {
                let (n, k, s) = (c(n), c(k), c(s));
                IntPoly::new(
                    vec![
                        (k - 2) * s * n - (k - 4) * n - (k - 2) * (k - 1) * s * s
                            + (k * k - 6 * k + 6) * s
                            + k * k
                            + 2 * k
                            - 8,
                        -2 * (k - 2) * n + (k - 2) * (2 * k - 1) * s + 2 * k * k + 2 * k - 6,
                        -(k - 2),
                    ],
                    1,
                )
            }
            PolyId::H { k, s } => {
                let (k, s) = (c(k), c(s));
                let [e, b, a] = h_parts(k);
                IntPoly::new(
                    vec![
                        h_const(k, s),
                        a * s + b,
                        e,
                    ],
                    1,
                )
            }
            PolyId::HLine { k } => {
                // substitute s = (n - 3) / m into H and clear the m^2 denominator
                let k = c(k);
                let m = k - 1;
                let [e, b, a] = h_parts(k);
                let cs2 = -(k - 2) * (k - 1);
                let cs1 = 2 * k * k * k - 6 * k * k + k + 4;
                let cs0 = k * k * k + 5 * k * k - 11 * k;
                IntPoly::new(
                    vec![
                        9 * cs2 - 3 * cs1 * m + cs0 * m * m,
                        -3 * a * m + b * m * m - 6 * cs2 + cs1 * m,
                        m * m * e + a * m + cs2,
                    ],
                    m * m,
                )
            }
            PolyId::Q { k } => {
                let k = c(k);
                IntPoly::new(
                    vec![
                        k * k * k - 3 * k * k - 7 * k + 56,
                        -(7 * k * k - 34 * k + 34),
                        -(k - 1) * (k - 2) * (k - 2),
                    ],
                    1,
                )
            }
            PolyId::R { k } => {
                let k = c(k);
                IntPoly::new(
                    vec![
                        k * k * k - k * k + k + 24,
                        -(3 * k * k - 20 * k + 22),
                        -(k - 1) * (k - 2) * (k - 2),
                    ],
                    1,
                )
            }
        })
    }
}

/// `[n^2 coefficient, n coefficient without s, s*n coefficient]` of `H`.
fn h_parts(k: i128) -> [i128; 3] {
    [-3 * (k - 2), -2 * k * k + 13 * k - 10, 2 * k * (k - 2)]
}

fn h_const(k: i128, s: i128) -> i128 {
    -(k - 2) * (k - 1) * s * s + (2 * k * k * k - 6 * k * k + k + 4) * s + k * k * k + 5 * k * k
        - 11 * k
}

/// Value of the identified polynomial at `x`.
pub fn eval_poly(id: PolyId, x: f64) -> Result<f64> {
    Ok(id.coefficients()?.eval(x))
}

/// Largest real root, searched in `[-bound, bound]`.
pub fn largest_root(id: PolyId, bound: f64) -> Result<f64> {
    id.coefficients()?
        .to_poly()
        .largest_real_root(-bound, bound, 1e-12)
        .ok_or_else(|| Error::InvalidParams(format!("{id} has no real root in range")))
}

/// `(5n - 6 + sqrt(17n^2 + 24n)) / 6`, the radius of `G#`.
pub fn rho_sharp_closed(n: usize) -> Result<f64> {
    gsharp_params(n)?;
    let n = n as f64;
    Ok((5.0 * n - 6.0 + (17.0 * n * n + 24.0 * n).sqrt()) / 6.0)
}

/// Wiener index of `G*`: `(n^2 + (2k-1)n - k^2 - 3k) / 2`.
pub fn gstar_wiener_closed(n: usize, k: usize) -> Result<u64> {
    gstar_params(n, k)?;
    let (n, k) = (n as u64, k as u64);
    let twice = n * n + (2 * k - 1) * n - k * k - 3 * k;
    // n(n+2k-1) and k(k+3) are both even
    debug_assert!(twice % 2 == 0);
    Ok(twice / 2)
}

/// Vertices of the join clique of a split-join layout.
pub fn join_clique(p: SplitJoinParams) -> Vec<usize> {
    Bits((1u64 << p.s) - 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_code;
    use crate::quotient::{is_equitable, quotient_matrix};
    use crate::spectra::{all_pairs_distances, spectral_radius, wiener};

    const SQRT19: f64 = 4.358898943540674;

    #[test]
    fn split_join_layout() {
        let g = build_split_join(SplitJoinParams { s: 1, a: 1, b: 5 }).unwrap();
        assert_eq!(g.order(), 7);
        assert_eq!(g.degree(0), 6);
        assert!((1..7).all(|v| g.degree(v) == 1));

        let g = build_split_join(SplitJoinParams { s: 2, a: 3, b: 2 }).unwrap();
        assert!(g.has_edge(0, 1) && g.has_edge(2, 4) && !g.has_edge(4, 5) && !g.has_edge(5, 6));
        assert!((2..7).all(|v| g.has_edge(0, v) && g.has_edge(1, v)));
        assert!(build_split_join(SplitJoinParams { s: 0, a: 3, b: 2 }).is_err());
        assert!(build_split_join(SplitJoinParams { s: 1, a: 0, b: 0 }).is_err());
        assert_eq!(
            build_split_join(SplitJoinParams { s: 3, a: 0, b: 0 }).unwrap(),
            Graph::complete(3).unwrap()
        );
    }

    #[test]
    fn gstar_examples() {
        let g = gstar(12, 4).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.degree(0), 11);
        assert_eq!((0..12).filter(|&v| g.degree(v) == 1).count(), 4);

        let star = Graph::empty(6).unwrap().join(&Graph::complete(1).unwrap()).unwrap();
        assert_eq!(
            canonical_code(&gstar(7, 5).unwrap()).unwrap(),
            canonical_code(&star).unwrap()
        );
        for k in 4..9 {
            let g = gstar(k + 2, k).unwrap();
            assert!(is_split_join(&g, SplitJoinParams { s: 1, a: 1, b: k }));
        }
        assert!(gstar(5, 4).is_err());
        assert!(gstar(10, 3).is_err());
    }

    #[test]
    fn gsharp_examples() {
        assert_eq!(
            canonical_code(&gsharp(6).unwrap()).unwrap(),
            canonical_code(&gstar(6, 4).unwrap()).unwrap()
        );
        assert_eq!(gsharp_params(9).unwrap(), SplitJoinParams { s: 2, a: 0, b: 7 });
        assert_eq!(gsharp_params(12).unwrap(), SplitJoinParams { s: 3, a: 0, b: 9 });
        for n in [7, 8, 10, 11] {
            let err = gsharp(n).unwrap_err().to_string();
            assert!(err.contains("undefined"), "{err}");
        }
        assert!(gsharp(3).is_err());
    }

    #[test]
    fn gtilde_is_gsharp_on_k4_line() {
        for s in 1..4 {
            let n = 3 * s + 3;
            assert_eq!(
                canonical_code(&gtilde(n, 4, s).unwrap()).unwrap(),
                canonical_code(&gsharp(n).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn gprime_meets_gtilde() {
        // t = (k-2)s + 3 gives back G~
        let (n, k, s) = (14, 5, 2);
        let t = (k - 2) * s + 3;
        assert_eq!(gprime(n, s, t).unwrap(), gtilde(n, k, s).unwrap());
    }

    #[test]
    fn g_polynomial_examples() {
        let g12 = PolyId::G { n: 12, k: 4 }.coefficients().unwrap();
        assert_eq!(g12.num, vec![-46, -87, -12, 1]);
        assert_eq!(eval_poly(PolyId::G { n: 12, k: 4 }, 0.0).unwrap(), -46.0);
        let x = 9.0 + 2.0 * SQRT19;
        let v = eval_poly(PolyId::G { n: 12, k: 4 }, x).unwrap();
        assert!((v - (68.0 + 32.0 * SQRT19)).abs() < 1e-9, "{v}");
        let x = (13.0 + 177f64.sqrt()) / 2.0;
        let v = eval_poly(PolyId::G { n: 9, k: 4 }, x).unwrap();
        assert!((v + 20.0).abs() < 1e-9, "{v}");
        assert_eq!(PolyId::G { n: 9, k: 4 }.coefficients().unwrap().num, vec![-28, -54, -9, 1]);
    }

    #[test]
    fn h_on_k4_line() {
        // s = (n - 3)/3 substituted by hand gives -4/3 n^2 + 34/3 n + 54
        let h = PolyId::HLine { k: 4 }.coefficients().unwrap();
        assert_eq!(h, IntPoly { num: vec![162, 34, -4], den: 3 });
        assert_eq!(h.eval_exact(12), (-6, 3));
        assert_eq!(h.eval_exact(13), (-72, 3));
        // the line restriction agrees with H at integral s
        for s in 1..20 {
            let n = 3 * s + 3;
            let direct = PolyId::H { k: 4, s }.coefficients().unwrap().eval_exact(n as i128);
            let (num, den) = h.eval_exact(n as i128);
            assert_eq!(direct.0 * den, num * direct.1);
        }
    }

    #[test]
    fn q_and_r_closed_forms() {
        // q(2) = -3k^3 + 3k^2 + 29k + 4 and r(2) = -3k^3 + 13k^2 + 9k - 4
        for k in 4..13i64 {
            let q2 = PolyId::Q { k }.coefficients().unwrap().eval_exact(2).0;
            let r2 = PolyId::R { k }.coefficients().unwrap().eval_exact(2).0;
            let kk = k as i128;
            assert_eq!(q2, -3 * kk * kk * kk + 3 * kk * kk + 29 * kk + 4);
            assert_eq!(r2, -3 * kk * kk * kk + 13 * kk * kk + 9 * kk - 4);
        }
    }

    #[test]
    fn polynomial_identities_at_integer_points() {
        for k in 4..9i64 {
            for s in 1..7i64 {
                for n in ((k - 1) * s + 3)..40 {
                    let f = PolyId::F { n, k, s }.coefficients().unwrap();
                    let g = PolyId::G { n, k }.coefficients().unwrap();
                    let p = PolyId::P { n, k, s }.coefficients().unwrap();
                    for x in -3..4i128 {
                        // f - g = (s - 1) p
                        let lhs = f.eval_exact(x).0 - g.eval_exact(x).0;
                        assert_eq!(lhs, (s as i128 - 1) * p.eval_exact(x).0);
                    }
                    let h = PolyId::H { k, s }.coefficients().unwrap();
                    assert_eq!(h.eval_exact(n as i128).0, p.eval_exact((n + k - 1) as i128).0);
                }
                let h = PolyId::H { k, s }.coefficients().unwrap();
                let q = PolyId::Q { k }.coefficients().unwrap();
                let r = PolyId::R { k }.coefficients().unwrap();
                assert_eq!(h.eval_exact(((k - 1) * s + 4) as i128).0, q.eval_exact(s as i128).0);
                assert_eq!(h.eval_exact(((k - 1) * s + 3) as i128).0, r.eval_exact(s as i128).0);
            }
        }
        let f1 = PolyId::F { n: 20, k: 6, s: 1 }.coefficients().unwrap();
        assert_eq!(f1, PolyId::G { n: 20, k: 6 }.coefficients().unwrap());
    }

    #[test]
    fn f_is_the_quotient_characteristic_polynomial() {
        let (n, k, s) = (12usize, 4usize, 1usize);
        let p = gtilde_params(n, k, s).unwrap();
        let d = all_pairs_distances(&build_split_join(p).unwrap()).unwrap();
        let part = p.block_partition();
        assert!(is_equitable(&d, &part).unwrap());
        let b = quotient_matrix(&d, &part).unwrap();
        assert_eq!(
            b.rows(),
            vec![vec![0.0, 7.0, 4.0], vec![1.0, 6.0, 8.0], vec![1.0, 14.0, 6.0]]
        );
        let cp = b.characteristic_polynomial();
        let f = PolyId::F { n: 12, k: 4, s: 1 }.coefficients().unwrap();
        for (a, b) in cp.coeffs().iter().zip(&f.num) {
            assert!((a - *b as f64).abs() < 1e-9);
        }
    }

    #[test]
    fn rho_sharp_values() {
        let r9 = rho_sharp_closed(9).unwrap();
        assert!((r9 - (13.0 + 177f64.sqrt()) / 2.0).abs() < 1e-12);
        let r6 = rho_sharp_closed(6).unwrap();
        assert!((r6 - (4.0 + 21f64.sqrt())).abs() < 1e-12);
        let r12 = rho_sharp_closed(12).unwrap();
        assert!((r12 - (9.0 + 2.0 * SQRT19)).abs() < 1e-12);
        assert!((spectral_radius(&gsharp(6).unwrap()).unwrap() - r6).abs() < 1e-9);
        assert!(rho_sharp_closed(10).is_err());
        // phi's largest root is the same number
        let phi = largest_root(PolyId::Phi { n: 9 }, 100.0).unwrap();
        assert!((phi - r9).abs() < 1e-10);
    }

    #[test]
    fn wiener_closed_form() {
        assert_eq!(gstar_wiener_closed(12, 4).unwrap(), 100);
        assert_eq!(gstar_wiener_closed(7, 5).unwrap(), 36);
        for k in 4..9 {
            let bfs = wiener(&all_pairs_distances(&gstar(k + 2, k).unwrap()).unwrap());
            assert_eq!(gstar_wiener_closed(k + 2, k).unwrap(), ((k + 1) * (k + 1)) as u64);
            assert_eq!(bfs, ((k + 1) * (k + 1)) as u64);
        }
        assert!(gstar_wiener_closed(5, 4).is_err());
    }

    #[test]
    fn shape_recognition() {
        let g = gstar(10, 4).unwrap();
        assert_eq!(clique_join_shape(&g), Some((1, vec![5, 1, 1, 1, 1])));
        let shuffled = g.relabel(&[9, 8, 7, 6, 5, 4, 3, 2, 1, 0]).unwrap();
        assert!(is_split_join(&shuffled, gstar_params(10, 4).unwrap()));
        assert!(!is_split_join(&gsharp(9).unwrap(), gstar_params(9, 4).unwrap()));
        assert_eq!(clique_join_shape(&Graph::complete(5).unwrap()), None);
        assert_eq!(clique_join_shape(&Graph::path(4).unwrap()), None);
    }

    #[test]
    fn malformed_ids() {
        assert!(PolyId::F { n: 10, k: 1, s: 1 }.coefficients().is_err());
        assert!(PolyId::Q { k: 0 }.coefficients().is_err());
        assert!(eval_poly(PolyId::Phi { n: 0 }, 1.0).is_err());
    }
}
