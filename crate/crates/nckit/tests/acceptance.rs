//! End-to-end acceptance gate.
//!
//! Each test replays one published guarantee at its full advertised size:
//! a count, a bijection, an involution, or a summation identity. Every test
//! prints exactly one pass/fail line (visible under `--nocapture` or on
//! failure) and asserts exact integer equality throughout; there are no
//! tolerances anywhere.

use nckit::model::{NoncrossingGraph, NoncrossingTree};
use nckit::{checks, counting, enumerate, graphs};
use num_bigint::BigInt;

fn conclude(label: &str, ok: bool) {
    println!("{label}: {}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "{label}");
}

fn big(values: &[i64]) -> Vec<BigInt> {
    values.iter().copied().map(BigInt::from).collect()
}

#[test]
fn criterion_1_tree_counts_and_oracle() {
    // Stream counts for 1..=8 edges against the closed form, set equality
    // against the chord-subset oracle where the oracle reaches, and the
    // closed form itself against the known first values.
    let report = checks::verify_tree_counts(8);
    let expected = [1, 1, 3, 12, 55, 273, 1428, 7752, 43263];
    let pinned = (0..=8).all(|n| counting::c_count(n) == BigInt::from(expected[n as usize]));
    conclude(
        "criterion 1: tree counts match the closed form and the subset oracle",
        report.all_pass() && pinned,
    );
}

#[test]
fn criterion_2_descent_distribution() {
    let report = checks::verify_descent_distribution(7);
    let pinned = (0..=2).map(|k| counting::d_count(3, k)).collect::<Vec<_>>() == big(&[5, 5, 2])
        && (0..=3).map(|k| counting::d_count(4, k)).collect::<Vec<_>>()
            == big(&[14, 21, 15, 5]);
    conclude(
        "criterion 2: descent distribution matches the two-binomial formula",
        report.all_pass() && pinned,
    );
}

#[test]
fn criterion_3_parity_involution_and_descent_gap() {
    // The involution is defined exactly on improper trees, flips descent
    // parity, has no fixed points, and undoes itself; consequently the
    // even-minus-odd gap equals the proper-tree count.
    let involution = checks::verify_phi_involution(7);
    let split = checks::verify_e_minus_o(7);
    let proper = [1, 1, 2, 3, 7, 12, 30];
    let pinned =
        (1..=7).all(|n| counting::s_count(n) == BigInt::from(proper[n as usize - 1]));
    conclude(
        "criterion 3: parity involution pairs off improper trees and leaves the proper count",
        involution.all_pass() && split.all_pass() && pinned,
    );
}

#[test]
fn criterion_4_proper_tree_folding() {
    let report = checks::verify_sigma_bijection(7);
    let expected = [1, 1, 2, 3, 7, 12, 30, 55];
    let pinned =
        (1..=8).all(|n| counting::s_count(n) == BigInt::from(expected[n as usize - 1]));
    let level_eight = enumerate::symmetric_ternary_trees(8).count() == 55;
    conclude(
        "criterion 4: proper trees fold bijectively onto symmetric ternary trees",
        report.all_pass() && pinned && level_eight,
    );
}

#[test]
fn criterion_5_even_ternary_correspondence() {
    // Round trips for every even plane tree with at most 12 edges, with
    // matching census on both sides.
    let report = checks::verify_psi_roundtrip(12);
    conclude(
        "criterion 5: even plane trees correspond to ternary trees through 12 edges",
        report.all_pass(),
    );
}

#[test]
fn criterion_6_canonical_tree_and_confluence() {
    let graph: NoncrossingGraph =
        "ncg:7:1-3,1-4,2-3,3-4,4-7,5-6,5-7,6-7".parse().expect("valid graph");
    let tree: NoncrossingTree =
        "nct:7:1-4,2-3,3-4,4-7,5-7,6-7".parse().expect("valid tree");
    let pinned = graphs::canonical_spanning_tree(&graph) == tree;
    let report = checks::verify_canonical_confluence(6, 200, checks::CONFLUENCE_SEED);
    conclude(
        "criterion 6: canonical spanning tree is order-independent over 200 shuffles",
        pinned && report.all_pass(),
    );
}

#[test]
fn criterion_7_assembly_bijection() {
    let report = checks::verify_assembly_roundtrip(6);
    let pinned = (3..=5).map(|k| counting::g_count(3, k)).collect::<Vec<_>>() == big(&[12, 9, 2])
        && (4..=7).map(|k| counting::g_count(4, k)).collect::<Vec<_>>()
            == big(&[55, 66, 30, 5]);
    conclude(
        "criterion 7: tree-plus-descents assembly reaches every connected graph once",
        report.all_pass() && pinned,
    );
}

#[test]
fn criterion_8_marked_involution_and_alternating_sum() {
    // Fixed points of the edge-toggling involution on marked graphs are
    // counted by the descent distribution; the matching alternating sum
    // collapses to the signed distribution numerically.
    let involution = checks::verify_companion_involution(5);
    let sums = checks::verify_alternating_sums(6);
    conclude(
        "criterion 8: marked-graph involution fixes exactly the descent-counted graphs",
        involution.all_pass() && sums.all_pass(),
    );
}

#[test]
fn criterion_9_closed_form_identities() {
    let signed = counting::verify_signed_descent_sums(20);
    let graph_sum = checks::verify_graph_descent_sums(12);
    let integral = checks::verify_count_integrality(200);
    conclude(
        "criterion 9: signed sums, the graph descent identity, and divisibility all hold",
        signed.all_pass() && graph_sum.all_pass() && integral.all_pass(),
    );
}
