//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`) and enforcing its runtime
//! budget. All identities are exact; there are no tolerances.

use std::time::{Duration, Instant};
use zetagraph::verify;

fn criterion<F>(number: u32, name: &str, budget: Duration, run: F)
where
    F: FnOnce() -> Result<(), String>,
{
    let start = Instant::now();
    let result = run();
    let elapsed = start.elapsed();
    let verdict = if result.is_ok() && elapsed <= budget { "pass" } else { "fail" };
    println!("acceptance {number} ({name}): {verdict} [{elapsed:.2?}, budget {budget:.0?}]");
    if let Err(msg) = result {
        panic!("criterion {number} ({name}) failed: {msg}");
    }
    assert!(
        elapsed <= budget,
        "criterion {number} ({name}) exceeded its budget: {elapsed:.2?} > {budget:.0?}"
    );
}

#[test]
fn criterion_1_tree_four_way_agreement() {
    criterion(1, "tree four-way agreement", Duration::from_secs(10), || {
        verify::tree_four_way(8, 20, 0xA11CE)
    });
}

#[test]
fn criterion_2_cusp_closed_form() {
    criterion(2, "cusp closed form", Duration::from_secs(5), || verify::cusp_identities(8));
}

#[test]
fn criterion_3_motivic_tree_recovery() {
    criterion(3, "motivic tree recovery", Duration::from_secs(10), || {
        verify::motivic_tree_recovery(6)
    });
}

#[test]
fn criterion_4_strata_oracle() {
    criterion(4, "strata oracle", Duration::from_secs(30), || verify::strata_oracle(5));
}

#[test]
fn criterion_5_cusp_motivic() {
    criterion(5, "cusp motivic", Duration::from_secs(5), || verify::cusp_motivic(8));
}

#[test]
fn criterion_6_functional_equation() {
    criterion(6, "functional equation", Duration::from_secs(5), || {
        verify::functional_equation(0)
    });
}

#[test]
fn criterion_7_closure_algorithm() {
    criterion(7, "closure algorithm", Duration::from_secs(20), || {
        verify::closure_randomized(1000, 100, 0xC105E)
    });
}

#[test]
fn criterion_8_hilbert_round_trip() {
    criterion(8, "hilbert round trip", Duration::from_secs(10), || {
        verify::hilbert_round_trip(8)
    });
}

#[test]
fn criterion_9_macdonald_identity() {
    criterion(9, "macdonald identity", Duration::from_secs(1), verify::macdonald);
}
