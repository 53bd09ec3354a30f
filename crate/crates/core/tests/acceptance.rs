//! One test per acceptance criterion; each prints its pass/fail line.

use lattice_zeta_core::acceptance::{run_criterion, run_suite, Suite};

fn check(id: u8) {
    let outcome = run_criterion(id).expect("known criterion");
    println!("{outcome}");
    assert!(outcome.passed, "{outcome}");
}

#[test]
fn criterion_01_special_values() {
    check(1);
}

#[test]
fn criterion_02_xi_functional_equation() {
    check(2);
}

#[test]
fn criterion_03_finite_sine_identities() {
    check(3);
}

#[test]
fn criterion_04_continuous_torus_vs_riemann_zeta() {
    check(4);
}

#[test]
fn criterion_05_zd_continuation() {
    check(5);
}

#[test]
fn criterion_06_discrete_torus_residuals() {
    check(6);
}

#[test]
fn criterion_07_three_term_sine_sum_model() {
    check(7);
}

#[test]
fn criterion_08_h_ratio_experiment() {
    check(8);
}

#[test]
fn criterion_09_tree_route_equivalence() {
    check(9);
}

#[test]
fn criterion_10_monotonicity_lemma_numerics() {
    check(10);
}

#[test]
fn criterion_11_negativity_on_unit_interval() {
    check(11);
}

#[test]
fn criterion_12_general_profile() {
    check(12);
}

#[test]
fn suites_partition_the_criteria() {
    let mut ids: Vec<u8> = [Suite::Identities, Suite::Asymptotics, Suite::Rh, Suite::Tree]
        .iter()
        .flat_map(|s| s.criteria().iter().copied())
        .collect();
    ids.sort();
    assert_eq!(ids, Suite::All.criteria());
    assert_eq!(run_suite(Suite::Tree).len(), 1);
}
