//! Acceptance suite: each criterion runs at the tolerance pinned in the
//! verify module and prints one pass/fail line (visible with
//! `cargo test --test acceptance -- --nocapture`).

use culminating::verify::{self, CheckResult};

fn run(result: CheckResult) {
    println!("{result}");
    assert!(result.pass, "{result}");
}

#[test]
fn criterion_01_oracle_equivalence() {
    run(verify::criterion_oracle_equivalence(18));
}

#[test]
fn criterion_02_fibonacci_form() {
    run(verify::criterion_fibonacci_form());
}

#[test]
fn criterion_03_example_recurrences() {
    run(verify::criterion_example_recurrences());
}

#[test]
fn criterion_04_unit_upstep_form() {
    run(verify::criterion_unit_upstep_form());
}

#[test]
fn criterion_05_low_height_uniqueness() {
    run(verify::criterion_low_height_uniqueness());
}

#[test]
fn criterion_06_grammar_lock() {
    run(verify::criterion_grammar_lock());
}

#[test]
fn criterion_07_null_drift_trend() {
    run(verify::criterion_null_drift_trend());
}

#[test]
fn criterion_08_positive_drift_support() {
    run(verify::criterion_positive_drift_support());
}

#[test]
fn criterion_09_negative_drift_growth() {
    run(verify::criterion_negative_drift_growth());
}

#[test]
fn criterion_10_sampler_uniformity() {
    run(verify::criterion_sampler_uniformity());
}

#[test]
fn criterion_11_complexity_trends() {
    run(verify::criterion_complexity_trends());
}

#[test]
fn criterion_12_reproducibility() {
    run(verify::criterion_reproducibility());
}
