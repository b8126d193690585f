//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//! Run with `cargo test -p skewcode-core --test acceptance -- --nocapture`.

use skewcode_core::reproduce::run;

fn criterion(id: u8) {
    let outcome = run(id);
    println!("{}", outcome.line());
    assert!(outcome.passed, "{}", outcome.line());
}

#[test]
fn criterion_01_gray_16_10_4() {
    criterion(1);
}

#[test]
fn criterion_02_gray_12_4_6_and_18_4_11() {
    criterion(2);
}

#[test]
fn criterion_03_gray_22_10_6() {
    criterion(3);
}

#[test]
fn criterion_04_gray_24_14_6() {
    criterion(4);
}

#[test]
fn criterion_05_gray_18_4_12_twist_scan() {
    criterion(5);
}

#[test]
fn criterion_06_bounded_36_30_4() {
    criterion(6);
}

#[test]
fn criterion_07_length4_divisors_and_matrices() {
    criterion(7);
}

#[test]
fn criterion_08_mixed_encode_decode_pipeline() {
    criterion(8);
}

#[test]
fn criterion_09_property_suites() {
    criterion(9);
}

#[test]
fn criterion_10_factorization_soundness() {
    criterion(10);
}
