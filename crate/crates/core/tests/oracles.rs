//! Library results against brute-force oracles that share no code with the
//! algorithms they check.

use dktree::canonical_code;
use dktree::harness::enumerate_connected;
use dktree::ktree::{find_win_violation, has_spanning_ktree, verify_tree_certificate};

mod common;
use common::*;

#[test]
fn canonical_code_matches_brute_force_forms() {
    for n in 1..=5 {
        let perms = permutations(n);
        let mut by_code = std::collections::HashMap::new();
        for m in 0..1u32 << pairs(n).len() {
            let g = from_bits(n, m);
            let form = brute_form(&g, &perms).0;
            let code = canonical_code(&g).unwrap();
            // the map code -> form must be a bijection
            assert_eq!(*by_code.entry(code).or_insert(form), form, "n = {n}, graph {m:b}");
        }
        let forms: std::collections::HashSet<_> = by_code.values().collect();
        assert_eq!(forms.len(), by_code.len());
    }
}

#[test]
fn canonical_code_on_six_vertices_by_random_relabelling() {
    // every seventh labelled graph on six vertices against a shuffled copy
    let perms = permutations(6);
    for m in (0..1u32 << 15).step_by(7) {
        let g = from_bits(6, m);
        let p = &perms[(m as usize * 31) % perms.len()];
        assert_eq!(canonical_code(&g).unwrap(), canonical_code(&g.relabel(p).unwrap()).unwrap());
    }
}

#[test]
fn enumeration_covers_every_labelled_connected_graph() {
    // sum over classes of n!/|Aut| is the number of labelled connected graphs
    for n in 1..=6 {
        let perms = permutations(n);
        let labelled = (0..1u32 << pairs(n).len()).filter(|&m| connected_by_search(n, m)).count();
        let classes = enumerate_connected(n).unwrap();
        let total: usize = classes.iter().map(|g| perms.len() / brute_form(g, &perms).1).sum();
        assert_eq!(total, labelled, "n = {n}");
        let mut forms: Vec<u32> = classes.iter().map(|g| brute_form(g, &perms).0).collect();
        forms.sort_unstable();
        forms.dedup();
        assert_eq!(forms.len(), classes.len(), "duplicate class at n = {n}");
    }
}

#[test]
fn ktree_matches_spanning_tree_enumeration() {
    for n in 1..=6 {
        for g in enumerate_connected(n).unwrap() {
            for k in 2..=4 {
                let v = has_spanning_ktree(&g, k).unwrap();
                assert_eq!(v.is_yes(), brute_spanning_ktree(&g, k), "{g:?}, k = {k}");
                if let Some(edges) = &v.tree_edges {
                    assert!(verify_tree_certificate(&g, k, edges));
                }
            }
        }
    }
}

#[test]
fn component_condition_implies_tree_and_converse_fails() {
    let mut converse_counterexample = None;
    for n in 2..=7 {
        for g in enumerate_connected(n).unwrap() {
            for k in 3..=5 {
                let violation = find_win_violation(&g, k).unwrap();
                let yes = has_spanning_ktree(&g, k).unwrap().is_yes();
                if violation.is_none() {
                    assert!(yes, "{g:?}, k = {k}");
                } else if yes && converse_counterexample.is_none() {
                    converse_counterexample = Some((g.clone(), k));
                }
            }
        }
    }
    // the condition is sufficient only: some violator still has a tree
    let (g, k) = converse_counterexample.expect("scan finds a violator with a spanning k-tree");
    let s = find_win_violation(&g, k).unwrap().unwrap();
    assert!(g.components_after_removal(s) >= (k - 2) * s.len() + 3);
    assert!(brute_spanning_ktree(&g, k));
}
