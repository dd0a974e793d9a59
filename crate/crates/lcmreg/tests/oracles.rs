//! Exhaustive cross-checks of the fast predicate implementations against
//! brute-force subset oracles.

use lcmreg::graph::{all_graphs, graph_count, graph_from_mask, Graph};
use rayon::prelude::*;

/// Induced-cycle search over all vertex subsets: the chordality oracle.
fn chordal_by_brute_force(g: &Graph) -> bool {
    let n = g.vertex_count();
    for mask in 0u16..(1 << n) {
        if mask.count_ones() < 4 {
            continue;
        }
        let h = g.induced_subgraph(mask).unwrap();
        let k = h.vertex_count();
        if h.edge_count() == k && (0..k).all(|v| h.degree(v) == 2) && h.is_connected() {
            return false;
        }
    }
    true
}

/// 4-subset scan for an induced star K_{1,3}.
fn claw_free_by_brute_force(g: &Graph) -> bool {
    let n = g.vertex_count();
    for mask in 0u16..(1 << n) {
        if mask.count_ones() != 4 {
            continue;
        }
        let h = g.induced_subgraph(mask).unwrap();
        let mut degs: Vec<u32> = (0..4).map(|v| h.degree(v)).collect();
        degs.sort_unstable();
        if degs == [1, 1, 1, 3] && h.edge_count() == 3 {
            return false;
        }
    }
    true
}

/// 4-subset scan for an induced 4-cycle.
fn induced_c4_by_brute_force(g: &Graph) -> bool {
    let n = g.vertex_count();
    for mask in 0u16..(1 << n) {
        if mask.count_ones() != 4 {
            continue;
        }
        let h = g.induced_subgraph(mask).unwrap();
        if h.edge_count() == 4 && (0..4).all(|v| h.degree(v) == 2) {
            return true;
        }
    }
    false
}

#[test]
fn complement_is_an_involution_exhaustively() {
    for n in 1..=4 {
        for g in all_graphs(n).unwrap() {
            assert_eq!(g.complement().complement(), g);
        }
    }
}

#[test]
fn chordality_matches_brute_force_through_n6() {
    for n in 1..=5 {
        for g in all_graphs(n).unwrap() {
            assert_eq!(g.is_chordal(), chordal_by_brute_force(&g), "{g:?}");
        }
    }
    let mismatches: u64 = (0..graph_count(6))
        .into_par_iter()
        .map(|mask| {
            let g = graph_from_mask(6, mask);
            u64::from(g.is_chordal() != chordal_by_brute_force(&g))
        })
        .sum();
    assert_eq!(mismatches, 0);
}

#[test]
fn subset_predicates_match_brute_force_through_n6() {
    let mismatches: u64 = (0..graph_count(6))
        .into_par_iter()
        .map(|mask| {
            let g = graph_from_mask(6, mask);
            let claw_ok = g.is_claw_free() == claw_free_by_brute_force(&g);
            let c4_ok = g.has_induced_c4() == induced_c4_by_brute_force(&g);
            u64::from(!(claw_ok && c4_ok))
        })
        .sum();
    assert_eq!(mismatches, 0);
}

#[test]
fn dirac_orders_exist_exactly_for_chordal_complements_through_n6() {
    // dirac_order itself asserts the direct Dirac check before returning.
    let mismatches: u64 = (0..graph_count(6))
        .into_par_iter()
        .map(|mask| {
            let g = graph_from_mask(6, mask);
            let expect = g.complement().is_chordal();
            u64::from(g.dirac_order().is_ok() != expect)
        })
        .sum();
    assert_eq!(mismatches, 0);
}
