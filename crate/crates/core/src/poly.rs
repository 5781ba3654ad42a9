//! Real polynomials in ascending-power form with Sturm-sequence root
//! isolation. Only meant for the low-degree characteristic polynomials of
//! quotient matrices and the closed forms in `extremal`.

#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    coeffs: Vec<f64>,
}

impl Poly {
    /// `coeffs[i]` multiplies `x^i`. Trailing zeros are trimmed.
    pub fn new(mut coeffs: Vec<f64>) -> Poly {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0.0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == 0.0
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| i as f64 * c)
                .collect(),
        )
    }

    /// Remainder of `self / divisor`, with coefficients below a relative
    /// cut-off treated as cancelled.
    fn rem(&self, divisor: &Poly) -> Poly {
        let scale = self
            .coeffs
            .iter()
            .chain(&divisor.coeffs)
            .fold(0.0f64, |m, c| m.max(c.abs()));
        let cut = scale * 1e-12;
        let mut r = self.coeffs.clone();
        let d = divisor.degree();
        let lead = divisor.coeffs[d];
        while r.len() > d && !r.is_empty() {
            let top = r.len() - 1;
            let q = r[top] / lead;
            for i in 0..=d {
                r[top - d + i] -= q * divisor.coeffs[i];
            }
            r.pop();
        }
        for c in r.iter_mut() {
            if c.abs() <= cut {
                *c = 0.0;
            }
        }
        Poly::new(r)
    }

    fn sturm_sequence(&self) -> Vec<Poly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() || seq[n - 1].degree() == 0 {
                break;
            }
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(Poly::new(r.coeffs.iter().map(|c| -c).collect()));
        }
        seq.retain(|p| !p.is_zero());
        seq
    }

    /// Distinct real roots in `(lo, hi]`, ascending, each to within `tol`.
    pub fn real_roots(&self, lo: f64, hi: f64, tol: f64) -> Vec<f64> {
        if self.degree() == 0 {
            return Vec::new();
        }
        let seq = self.sturm_sequence();
        let changes = |x: f64| {
            let mut last = 0.0f64;
            let mut count = 0usize;
            for p in &seq {
                let v = p.eval(x);
                if v != 0.0 {
                    if last != 0.0 && (v < 0.0) != (last < 0.0) {
                        count += 1;
                    }
                    last = v;
                }
            }
            count
        };
        // number of distinct roots in (a, b] is changes(a) - changes(b)
        let mut out = Vec::new();
        let mut stack = vec![(lo, hi, changes(lo), changes(hi))];
        while let Some((a, b, ca, cb)) = stack.pop() {
            let count = ca.saturating_sub(cb);
            if count == 0 {
                continue;
            }
            if b - a <= tol {
                out.push(0.5 * (a + b));
                continue;
            }
            let m = 0.5 * (a + b);
            if m <= a || m >= b {
                out.push(m);
                continue;
            }
            let cm = changes(m);
            stack.push((a, m, ca, cm));
            stack.push((m, b, cm, cb));
        }
        out.sort_by(f64::total_cmp);
        out
    }

    pub fn largest_real_root(&self, lo: f64, hi: f64, tol: f64) -> Option<f64> {
        self.real_roots(lo, hi, tol).last().copied()
    }
}

/// Characteristic polynomial `det(xI - A)` of a dense `r x r` matrix by the
/// Faddeev-LeVerrier recurrence.
pub fn characteristic_polynomial(a: &[f64], r: usize) -> Poly {
    assert_eq!(a.len(), r * r);
    let mut c = vec![0.0; r + 1];
    c[r] = 1.0;
    let mut m = vec![0.0; r * r];
    for k in 1..=r {
        // M_k = A M_{k-1} + c_{r-k+1} I
        let mut next = vec![0.0; r * r];
        for i in 0..r {
            for j in 0..r {
                next[i * r + j] = (0..r).map(|l| a[i * r + l] * m[l * r + j]).sum::<f64>();
            }
            next[i * r + i] += c[r - k + 1];
        }
        m = next;
        let trace: f64 = (0..r)
            .map(|i| (0..r).map(|l| a[i * r + l] * m[l * r + i]).sum::<f64>())
            .sum();
        c[r - k] = -trace / k as f64;
    }
    Poly::new(c)
}
