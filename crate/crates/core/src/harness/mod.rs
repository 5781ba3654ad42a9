//! Verification campaigns: the spectral spanning k-tree condition on small
//! orders, numeric sweeps of the radius comparisons behind it, and property
//! suites for the supporting facts.
//!
//! Every campaign returns a [`VerificationReport`]; a record is an anomaly
//! exactly when it contradicts the statement being checked.

mod claims;
mod enumerate;
mod lemmas;
mod theorem;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub use crate::io::report::{Record, Summary, Verdict, VerificationReport};
pub use claims::sweep_claims;
pub use enumerate::{enumerate_connected, MAX_ENUM_ORDER};
pub use lemmas::{lemma_property_suite, split_join_quotient_grid};
pub use theorem::{verify_theorem_1_1, Mode};

/// Radius comparisons pass within this margin.
pub const COMPARISON_MARGIN: f64 = 1e-8;
/// Records this close to their threshold are recomputed at tight tolerance.
pub const BORDERLINE_WINDOW: f64 = 1e-6;
/// Two tight-tolerance radii closer than this are treated as equal.
pub const TIE_TOLERANCE: f64 = 1e-11;
/// Strict inequalities must clear this gap.
pub const STRICT_GAP: f64 = 1e-9;

/// Independent generator for item `stream` of a seeded campaign, so results
/// do not depend on evaluation order.
pub(crate) fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// `G(n, 1/2)` conditioned on connectivity by rejection.
pub(crate) fn random_connected<R: Rng>(n: usize, rng: &mut R) -> Graph {
    loop {
        let mut edges = Vec::new();
        for j in 1..n {
            for i in 0..j {
                if rng.gen_bool(0.5) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).expect("valid order");
        if g.is_connected() {
            return g;
        }
    }
}

/// Integer partitions of `m` into positive parts, each nonincreasing.
pub(crate) fn partitions(m: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}
