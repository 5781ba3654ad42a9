//! Seeded property checks for the facts the extremal argument rests on.

use rand::Rng;
use rayon::prelude::*;
use serde_json::json;

use super::enumerate::connected_classes;
use super::{random_connected, stream_rng, STRICT_GAP};
use crate::error::{Error, Result};
use crate::extremal::{build_split_join, clique_join, SplitJoinParams};
use crate::io::graph6::write_graph6;
use crate::io::report::{Record, VerificationReport};
use crate::ktree::{find_win_violation, has_spanning_ktree};
use crate::quotient::{is_equitable, quotient_lambda1, quotient_matrix};
use crate::spectra::{all_pairs_distances, lambda1, spectral_radius};

const QUOTIENT_TOLERANCE: f64 = 1e-8;
const WIN_MAX_ORDER: usize = 7;

const EDGE_STREAM: u64 = 1 << 32;
const QUOTIENT_STREAM: u64 = 2 << 32;
const COMPOSITION_STREAM: u64 = 3 << 32;

/// Deleting any edge that is not a bridge strictly increases the radius.
fn edge_deletion(seed: u64, i: u64) -> Result<Record> {
    let mut rng = stream_rng(seed, EDGE_STREAM | i);
    let n = rng.gen_range(4..=10);
    let (g, cycle_edges) = loop {
        let g = random_connected(n, &mut rng);
        let cycle_edges: Vec<(usize, usize)> = g
            .edges()
            .filter(|&(u, v)| g.delete_edge(u, v).is_ok_and(|h| h.is_connected()))
            .collect();
        if !cycle_edges.is_empty() {
            break (g, cycle_edges);
        }
    };
    let base = spectral_radius(&g)?;
    let mut worst = f64::INFINITY;
    for &(u, v) in &cycle_edges {
        worst = worst.min(spectral_radius(&g.delete_edge(u, v)?)?);
    }
    Ok(Record::new("edge_deletion", write_graph6(&g)?, n, worst, base)
        .with_note(format!("{} non-bridge edges, least radius after deletion", cycle_edges.len()))
        .failed(worst - base <= STRICT_GAP))
}

fn quotient_record(p: SplitJoinParams) -> Result<Record> {
    let d = all_pairs_distances(&build_split_join(p)?)?;
    let partition = p.block_partition();
    let equitable = is_equitable(&d, &partition)?;
    let q = quotient_lambda1(&quotient_matrix(&d, &partition)?);
    let full = lambda1(&d)?.lambda1;
    let code = format!("K{} v (K{} u {}K1)", p.s, p.a, p.b);
    Ok(Record::new("quotient", code, p.order(), q, full)
        .with_note(if equitable { "equitable" } else { "not equitable" })
        .failed(!equitable || (q - full).abs() > QUOTIENT_TOLERANCE))
}

fn random_split_join(seed: u64, i: u64) -> Result<Record> {
    let mut rng = stream_rng(seed, QUOTIENT_STREAM | i);
    let p = SplitJoinParams::new(rng.gen_range(1..=4), rng.gen_range(0..=10), rng.gen_range(1..=10))?;
    quotient_record(p)
}

/// Merging all but one clique below the join into singletons never
/// increases the radius, and strictly decreases it unless nothing changes.
fn composition(seed: u64, i: u64) -> Result<Record> {
    let mut rng = stream_rng(seed, COMPOSITION_STREAM | i);
    let s = rng.gen_range(1..=4);
    let t = rng.gen_range(2..=6);
    let mut parts: Vec<usize> = (0..t).map(|_| rng.gen_range(1..=5)).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    let n = s + parts.iter().sum::<usize>();
    let mut target = vec![n - s - t + 1];
    target.extend(std::iter::repeat_n(1, t - 1));
    let lam = spectral_radius(&clique_join(s, &parts)?)?;
    let reference = spectral_radius(&clique_join(s, &target)?)?;
    let same = parts == target;
    let diff = lam - reference;
    let bad = diff < -STRICT_GAP || (!same && diff <= STRICT_GAP);
    let code = format!("s={s} parts={parts:?}");
    Ok(Record::new("composition", code, n, lam, reference)
        .with_note(if same { "equality case" } else { "strict case" })
        .failed(bad))
}

/// Every connected graph meeting the component condition has a spanning
/// k-tree (checked, not assumed, for all classes up to seven vertices).
fn win_scan(report: &mut VerificationReport) -> Result<u64> {
    let mut examined = 0;
    for n in 2..=WIN_MAX_ORDER {
        let classes = connected_classes(n, WIN_MAX_ORDER)?;
        let items: Vec<Result<Vec<Record>>> = classes
            .par_iter()
            .map(|(code, g)| {
                let lam = spectral_radius(g)?;
                (3..=5)
                    .map(|k| {
                        let violation = find_win_violation(g, k)?;
                        let verdict = has_spanning_ktree(g, k)?;
                        let note = match violation {
                            Some(_) => "condition fails",
                            None => "condition holds",
                        };
                        Ok(Record::new("component_condition", code.to_string(), n, lam, lam)
                            .with_k(k)
                            .with_ktree(verdict.outcome)
                            .with_note(note)
                            .failed(violation.is_none() && !verdict.is_yes()))
                    })
                    .collect()
            })
            .collect();
        for item in items {
            for r in item? {
                report.push(r);
            }
        }
        examined += 3 * classes.len() as u64;
    }
    Ok(examined)
}

/// Runs `trials` seeded instances each of the edge-deletion, quotient and
/// composition properties, plus the exhaustive component-condition scan.
pub fn lemma_property_suite(trials: u64, seed: u64) -> Result<VerificationReport> {
    if trials == 0 {
        return Err(Error::InvalidParams("trials must be at least 1".into()));
    }
    let parameters = json!({
        "trials": trials,
        "strict_gap": STRICT_GAP,
        "quotient_tolerance": QUOTIENT_TOLERANCE,
        "component_scan_max_order": WIN_MAX_ORDER,
    });
    let mut report = VerificationReport::new("lemmas", parameters, Some(seed));
    let checks: [fn(u64, u64) -> Result<Record>; 3] = [edge_deletion, random_split_join, composition];
    for check in checks {
        let items: Vec<Result<Record>> = (0..trials).into_par_iter().map(|i| check(seed, i)).collect();
        for r in items {
            report.push(r?);
        }
    }
    let examined = 3 * trials + win_scan(&mut report)?;
    report.finalize(examined);
    Ok(report)
}

/// Quotient check on every split-join `K_s ∨ (K_a ∪ bK1)` in the box.
pub fn split_join_quotient_grid(s_max: usize, a_max: usize, b_max: usize) -> Result<VerificationReport> {
    let parameters = json!({"s_max": s_max, "a_max": a_max, "b_max": b_max, "quotient_tolerance": QUOTIENT_TOLERANCE});
    let mut report = VerificationReport::new("quotient_grid", parameters, None);
    let mut grid = Vec::new();
    for s in 1..=s_max {
        for a in 0..=a_max {
            for b in 1..=b_max {
                grid.push(SplitJoinParams::new(s, a, b)?);
            }
        }
    }
    let items: Vec<Result<Record>> = grid.par_iter().map(|&p| quotient_record(p)).collect();
    for r in items {
        report.push(r?);
    }
    report.finalize(grid.len() as u64);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn without(g: &Graph, u: usize, v: usize) -> f64 {
        spectral_radius(&g.delete_edge(u, v).unwrap()).unwrap()
    }

    #[test]
    fn cycle_versus_path() {
        let c6 = Graph::cycle(6).unwrap();
        // P6 has Wiener index 35, C6 has 27
        assert!(without(&c6, 0, 5) > spectral_radius(&c6).unwrap() + STRICT_GAP);
    }

    #[test]
    fn composition_examples() {
        let g = spectral_radius(&clique_join(2, &[3, 2, 1]).unwrap()).unwrap();
        let reference = spectral_radius(&clique_join(2, &[4, 1, 1]).unwrap()).unwrap();
        assert!(g > reference + STRICT_GAP);
        let same = clique_join(2, &[4, 1, 1]).unwrap();
        assert!((spectral_radius(&same).unwrap() - reference).abs() < 1e-9);
    }

    #[test]
    fn suite_is_clean_and_reproducible() {
        let a = lemma_property_suite(20, 5).unwrap();
        let bad: Vec<_> = a.records.iter().filter(|r| r.anomaly).collect();
        assert!(bad.is_empty(), "{bad:#?}");
        let b = lemma_property_suite(20, 5).unwrap();
        assert_eq!(a.to_json().unwrap(), b.to_json().unwrap());
        assert!(lemma_property_suite(0, 5).is_err());
    }

    #[test]
    fn small_quotient_grid() {
        let rep = split_join_quotient_grid(2, 3, 3).unwrap();
        assert_eq!(rep.summary.records, 2 * 4 * 3);
        assert_eq!(rep.summary.anomalies, 0);
    }
}
