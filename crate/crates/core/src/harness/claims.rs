//! Numeric sweep over the comparison chain `G' -> G~ -> G* (or G#)` and
//! the sign conditions on the auxiliary polynomials behind it.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde_json::json;

use super::{COMPARISON_MARGIN, STRICT_GAP, TIE_TOLERANCE};
use crate::error::{Error, Result};
use crate::extremal::{
    build_split_join, gprime_params, gsharp_params, gstar_params, gtilde_params, PolyId,
    SplitJoinParams,
};
use crate::graph::canonical_code;
use crate::io::report::{Record, VerificationReport};
use crate::spectra::{spectral_radius, spectral_radius_with_tolerance, TIGHT_TOLERANCE};

type Radii = HashMap<SplitJoinParams, f64>;

fn radii(params: BTreeSet<SplitJoinParams>, tol: f64) -> Result<Radii> {
    params
        .into_par_iter()
        .map(|p| {
            let g = build_split_join(p)?;
            let r = if tol == TIGHT_TOLERANCE {
                spectral_radius_with_tolerance(&g, tol)?
            } else {
                spectral_radius(&g)?
            };
            Ok((p, r))
        })
        .collect()
}

/// `lo < hi` by a clear gap, or `lo == hi` within the margin when `equal`.
fn ordered(check: &str, code: String, n: usize, lo: f64, hi: f64, equal: bool) -> Record {
    let bad = if equal {
        (hi - lo).abs() > COMPARISON_MARGIN
    } else {
        hi - lo <= STRICT_GAP
    };
    let note = if equal { "equal" } else { "strict" };
    Record::new(check, code, n, lo, hi).with_note(note).failed(bad)
}

/// Exact sign check of an integer-coefficient polynomial at an integer.
fn negative_at(check: &str, id: PolyId, x: i64, n: usize) -> Result<Record> {
    let (num, den) = id.coefficients()?.eval_exact(x as i128);
    let value = num as f64 / den as f64;
    Ok(Record::new(check, format!("{id} at {x}"), n, value, 0.0)
        .with_note("negative")
        .failed(num >= 0))
}

fn close_to(check: &str, code: String, n: usize, value: f64, expected: f64, tol: f64) -> Record {
    Record::new(check, code, n, value, expected)
        .with_note(format!("within {tol:e}"))
        .failed((value - expected).abs() > tol)
}

/// Sweeps every grid point with `4 <= k <= k_max`, `1 <= s <= s_max` and
/// order at most `n_max`. Bounds below the smallest cases the claims speak
/// about (`k_max >= 5`, `s_max >= 2`, `n_max >= 12`) are rejected.
pub fn sweep_claims(k_max: usize, s_max: usize, n_max: usize) -> Result<VerificationReport> {
    if k_max < 5 || s_max < 2 || n_max < 12 {
        return Err(Error::InvalidParams(format!(
            "sweep bounds must reach k_max >= 5, s_max >= 2, n_max >= 12; \
             got k_max = {k_max}, s_max = {s_max}, n_max = {n_max}"
        )));
    }
    let parameters = json!({
        "k_max": k_max,
        "s_max": s_max,
        "n_max": n_max,
        "comparison_margin": COMPARISON_MARGIN,
        "strict_gap": STRICT_GAP,
    });
    let mut report = VerificationReport::new("claims", parameters, None);

    // grid of (k, s, n) with G~ defined
    let mut grid = Vec::new();
    for k in 4..=k_max {
        for s in 1..=s_max {
            for n in (k - 1) * s + 3..=n_max {
                grid.push((k, s, n));
            }
        }
    }

    let mut needed = BTreeSet::new();
    for &(k, s, n) in &grid {
        needed.insert(gtilde_params(n, k, s)?);
        needed.insert(gstar_params(n, k)?);
        for t in (k - 2) * s + 3..=n - s {
            needed.insert(gprime_params(n, s, t)?);
        }
    }
    let r = radii(needed, 0.0)?;

    for &(k, s, n) in &grid {
        let tilde = r[&gtilde_params(n, k, s)?];
        let star = r[&gstar_params(n, k)?];
        // G~ has the smallest radius among the G' with t >= (k-2)s + 3
        for t in (k - 2) * s + 3..=n - s {
            let prime = r[&gprime_params(n, s, t)?];
            let code = format!("G~({n},{k},{s}) vs G'({n},{s},{t})");
            let equal = t == (k - 2) * s + 3;
            report.push(ordered("tilde_vs_prime", code, n, tilde, prime, equal).with_k(k));
        }
        let code = format!("G*({n},{k}) vs G~({n},{k},{s})");
        if n >= (k - 1) * s + 4 {
            // n >= (k-1)s + 4
            report.push(ordered("star_vs_tilde", code, n, star, tilde, s == 1).with_k(k));
            if s >= 2 {
                let f = PolyId::F { n: n as i64, k: k as i64, s: s as i64 };
                let value = f.coefficients()?.eval(star);
                report.push(
                    Record::new("f_at_theta", format!("{f} at theta"), n, value, 0.0)
                        .with_k(k)
                        .with_note("negative")
                        .failed(value >= 0.0),
                );
                let h = PolyId::H { k: k as i64, s: s as i64 };
                report.push(negative_at("h_sign", h, n as i64, n)?.with_k(k));
            }
        } else if k >= 5 {
            // boundary order n = (k-1)s + 3
            report.push(ordered("star_vs_tilde_boundary", code, n, star, tilde, s == 1).with_k(k));
            if s >= 2 {
                let h = PolyId::H { k: k as i64, s: s as i64 };
                report.push(negative_at("h_sign_boundary", h, n as i64, n)?.with_k(k));
            }
        }
    }

    for k in 4..=k_max {
        for s in 2..=s_max {
            report.push(negative_at("q", PolyId::Q { k: k as i64 }, s as i64, (k - 1) * s + 4)?.with_k(k));
            if k >= 5 {
                report.push(negative_at("r", PolyId::R { k: k as i64 }, s as i64, (k - 1) * s + 3)?.with_k(k));
            }
        }
    }

    // k = 4 line n = 3s + 3
    let line = PolyId::HLine { k: 4 };
    let (num, den) = line.coefficients()?.eval_exact(12);
    report.push(
        Record::new("h_line", format!("{line} at 12"), 12, num as f64 / den as f64, 0.0)
            .with_k(4)
            .with_note("boundary value, no sign asserted"),
    );
    for n in 13..=n_max {
        report.push(negative_at("h_line", line, n as i64, n)?.with_k(4));
    }
    let line_orders: BTreeSet<usize> = (12..=n_max).step_by(3).collect();
    let mut needed = BTreeSet::new();
    for &n in &line_orders {
        needed.insert(gstar_params(n, 4)?);
        needed.insert(gsharp_params(n)?);
    }
    let tight = radii(needed, TIGHT_TOLERANCE)?;
    for &n in &line_orders {
        // resolved at tight tolerance
        let star = tight[&gstar_params(n, 4)?];
        let sharp = tight[&gsharp_params(n)?];
        let code = format!("G*({n},4) vs G#({n})");
        report.push(
            Record::new("star_vs_sharp", code, n, star, sharp)
                .with_k(4)
                .with_note("strict")
                .borderline(n == 12)
                .failed(sharp - star <= TIE_TOLERANCE),
        );
    }
    let root19 = 9.0 + 2.0 * 19f64.sqrt();
    let g12 = PolyId::G { n: 12, k: 4 }.coefficients()?;
    report.push(close_to(
        "g_values",
        format!("{} at 9+2sqrt19", PolyId::G { n: 12, k: 4 }),
        12,
        g12.eval(root19),
        68.0 + 32.0 * 19f64.sqrt(),
        1e-6,
    ));
    report.push(close_to(
        "g_values",
        format!("d/dx {} at 9+2sqrt19", PolyId::G { n: 12, k: 4 }),
        12,
        g12.to_poly().derivative().eval(root19),
        168.0 + 60.0 * 19f64.sqrt(),
        1e-6,
    ));

    // n = 6 and n = 9 on the same line
    let star6 = build_split_join(gstar_params(6, 4)?)?;
    let sharp6 = build_split_join(gsharp_params(6)?)?;
    let same = canonical_code(&star6)? == canonical_code(&sharp6)?;
    report.push(
        ordered("sharp_vs_star_small", "G*(6,4) vs G#(6)".into(), 6, spectral_radius(&sharp6)?, spectral_radius(&star6)?, true)
            .with_k(4)
            .failed(!same),
    );
    let star9 = spectral_radius_with_tolerance(&build_split_join(gstar_params(9, 4)?)?, TIGHT_TOLERANCE)?;
    let sharp9 = spectral_radius_with_tolerance(&build_split_join(gsharp_params(9)?)?, TIGHT_TOLERANCE)?;
    report.push(ordered("sharp_vs_star_small", "G#(9) vs G*(9,4)".into(), 9, sharp9, star9, false).with_k(4));
    let root177 = (13.0 + 177f64.sqrt()) / 2.0;
    report.push(close_to(
        "g_values",
        format!("{} at (13+sqrt177)/2", PolyId::G { n: 9, k: 4 }),
        9,
        PolyId::G { n: 9, k: 4 }.coefficients()?.eval(root177),
        -20.0,
        1e-6,
    ));

    let classes = report.records.len() as u64;
    report.finalize(classes);
    Ok(report)
}
