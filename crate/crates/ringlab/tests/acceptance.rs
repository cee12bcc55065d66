//! Acceptance suite: one test per numbered criterion, each printing a
//! pass/fail line. The `selftest` command runs the same functions.

use ringlab::selftest::run_criterion;

fn run(number: u32) {
    let outcome = run_criterion(number, 4);
    println!(
        "{} criterion {:2}: {} ({} ms) {}",
        if outcome.pass { "pass" } else { "FAIL" },
        outcome.number,
        outcome.name,
        outcome.millis,
        outcome.detail
    );
    assert!(
        outcome.pass,
        "criterion {number} ({}) failed: {}",
        outcome.name, outcome.detail
    );
}

#[test]
fn criterion_01_classification_counts() {
    run(1);
}

#[test]
fn criterion_02_regular_powers_chain_end_to_end() {
    run(2);
}

#[test]
fn criterion_03_exchange_chain_end_to_end() {
    run(3);
}

#[test]
fn criterion_04_catalog_chain_sweep() {
    run(4);
}

#[test]
fn criterion_05_stable_range_one() {
    run(5);
}

#[test]
fn criterion_06_unit_regularity_oracle_agreement() {
    run(6);
}

#[test]
fn criterion_07_randomized_splitting_suite() {
    run(7);
}

#[test]
fn criterion_08_idempotent_power_splits() {
    run(8);
}

#[test]
fn criterion_09_negative_controls() {
    run(9);
}

#[test]
fn criterion_10_report_determinism() {
    run(10);
}
