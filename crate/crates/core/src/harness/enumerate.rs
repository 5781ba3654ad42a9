//! Connected graphs up to isomorphism, grown one vertex at a time.
//!
//! Every connected graph on `n + 1` vertices has a vertex whose deletion
//! leaves it connected, so attaching a new vertex to a nonempty neighbour
//! set of each connected `n`-vertex class reaches every class. Duplicates
//! are removed by canonical code.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{canonical_code, CanonicalCode, Graph};

/// Order cap for [`enumerate_connected`].
pub const MAX_ENUM_ORDER: usize = 8;

/// All labelled one-vertex extensions of `g` that stay connected.
pub(crate) fn extensions(g: &Graph) -> impl Iterator<Item = Graph> + '_ {
    let n = g.order();
    (1u64..1 << n).map(move |mask| g.add_vertex(mask).expect("order below cap"))
}

fn dedup(mut found: Vec<(CanonicalCode, Graph)>) -> Vec<(CanonicalCode, Graph)> {
    found.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    found.dedup_by(|a, b| a.0 == b.0);
    found
}

/// Canonical representatives keyed by code, sorted by code. Unlike
/// [`enumerate_connected`] this admits one order past the cap, for the
/// campaigns that only extend the largest enumerable level.
pub(crate) fn connected_classes(n: usize, cap: usize) -> Result<Vec<(CanonicalCode, Graph)>> {
    if n == 0 {
        return Err(Error::InvalidParams("order must be at least 1".into()));
    }
    if n > cap {
        return Err(Error::OrderTooLarge { n, max: cap });
    }
    let k1 = Graph::complete(1)?;
    let mut level = vec![(canonical_code(&k1)?, k1)];
    for _ in 1..n {
        let found: Vec<(CanonicalCode, Graph)> = level
            .par_iter()
            .flat_map_iter(|(_, g)| {
                extensions(g).map(|h| {
                    let code = canonical_code(&h).expect("order within canonical cap");
                    let rep = code.to_graph();
                    (code, rep)
                })
            })
            .collect();
        level = dedup(found);
    }
    Ok(level)
}

/// One canonically labelled representative per isomorphism class of
/// connected graphs on `n` vertices, ordered by canonical code.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    Ok(connected_classes(n, MAX_ENUM_ORDER)?
        .into_iter()
        .map(|(_, g)| g)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_connected(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn representatives_are_connected_and_canonical() {
        for g in enumerate_connected(5).unwrap() {
            assert!(g.is_connected());
            assert_eq!(canonical_code(&g).unwrap().to_graph(), g);
        }
    }

    #[test]
    fn guards() {
        assert!(enumerate_connected(0).is_err());
        assert!(matches!(enumerate_connected(9), Err(Error::OrderTooLarge { n: 9, .. })));
    }
}
