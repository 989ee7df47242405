//! End-to-end tests of the command-line binary: exit codes, JSON schema,
//! table rendering, and byte-level determinism.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_zetagraph"))
}

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn validate_cusp3() {
    let out = run(&["validate", "--input", &fixture("cusp3")]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["graph_class"], "CuspCycle");
    assert_eq!(doc["det_abs"], "3");
    assert_eq!(doc["zk_equals_e"], true);
    assert_eq!(doc["cycle_count"], 1);
}

#[test]
fn validate_a2() {
    let out = run(&["validate", "--input", &fixture("a2")]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["graph_class"], "TreeRational");
    assert_eq!(doc["det_abs"], "3");
}

#[test]
fn validate_reads_stdin() {
    use std::io::Write;
    let mut child = bin()
        .args(["validate", "--stdin"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"vertices":[{"id":"v","euler":-5}],"edges":[["v","v"]]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["graph_class"], "CuspCycle");
}

#[test]
fn non_definite_graph_exits_1_with_reason() {
    use std::io::Write;
    let mut child = bin()
        .args(["validate", "--stdin"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"vertices":[{"id":"a","euler":-1},{"id":"b","euler":-1}],"edges":[["a","b"]]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let doc = stdout_json(&out);
    assert!(doc["reason"].as_str().unwrap().contains("negative definite"));
}

#[test]
fn unsupported_class_exits_2() {
    use std::io::Write;
    let mut child = bin()
        .args(["zeta", "--stdin", "--formula", "incexc"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"vertices":[{"id":"a","euler":-3,"genus":1}],"edges":[]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout_json(&out)["reason"].as_str().unwrap().contains("not supported"));
}

#[test]
fn zeta_all_on_cusp3_has_three_slots_and_agrees() {
    let out = run(&["zeta", "--input", &fixture("cusp3"), "--order", "6"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    let slots = doc["series"].as_object().unwrap();
    assert_eq!(slots.len(), 3);
    assert!(slots.contains_key("z_incexc"));
    assert!(slots.contains_key("z_arrangement"));
    assert!(slots.contains_key("z_cusp_closed"));
    assert_eq!(doc["verdicts"]["agree"], "pass");
}

#[test]
fn zeta_all_on_e8_has_four_slots_and_agrees() {
    let out = run(&["zeta", "--input", &fixture("e8"), "--order", "8"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["series"].as_object().unwrap().len(), 4);
    assert_eq!(doc["verdicts"]["agree"], "pass");
}

#[test]
fn zeta_product_on_cusp_warns_information_free() {
    let out = run(&["zeta", "--input", &fixture("cusp1"), "--formula", "product"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert!(doc["warnings"][0].as_str().unwrap().contains("information-free"));
    // constant 1
    let series = doc["series"]["z_product"].as_array().unwrap();
    assert_eq!(series.len(), 1);
    assert_eq!(series[0]["coeff"], 1);
}

#[test]
fn motivic_cusp_example_coefficients() {
    let out = run(&[
        "motivic",
        "--input",
        &fixture("cusp1"),
        "--variant",
        "cusp",
        "--order",
        "4",
        "--format",
        "table",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for line in ["(0) 1", "(1) 1", "(2) 1+L", "(3) 1+L+L^2", "(4) 1+L+L^2+L^3"] {
        assert!(text.contains(line), "missing {line:?} in:\n{text}");
    }
}

#[test]
fn motivic_all_on_tree_cross_checks() {
    let out = run(&["motivic", "--input", &fixture("d4"), "--order", "4"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["verdicts"]["strata_agree"], "pass");
    assert_eq!(doc["verdicts"]["tree_agree"], "pass");
    assert_eq!(doc["verdicts"]["specialization"], "pass");
}

#[test]
fn hilbert_at_e_on_loop_cusp() {
    let out = run(&[
        "hilbert",
        "--input",
        &fixture("cusp1"),
        "--at",
        "1",
        "--order",
        "8",
        "--round-trip",
    ]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["hilbert"], "1");
    assert_eq!(doc["support"].as_array().unwrap().len(), 1);
    assert_eq!(doc["round_trip"]["deviation"], "0");
}

#[test]
fn hilbert_at_zero_is_zero() {
    let out = run(&["hilbert", "--input", &fixture("cusp3"), "--at", "0,0,0"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["hilbert"], "0");
}

#[test]
fn hilbert_insufficient_truncation_reports_requirement() {
    let out = run(&[
        "hilbert",
        "--input",
        &fixture("cusp1"),
        "--at",
        "2",
        "--order",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let reason = stdout_json(&out)["reason"].as_str().unwrap().to_string();
    assert!(reason.contains("need at least 5"), "{reason}");
}

#[test]
fn verify_single_suites_pass() {
    for suite in ["macdonald", "cusp-identities", "closure"] {
        let out = run(&["verify", "--suite", suite, "--order", "5", "--seed", "7"]);
        assert!(out.status.success(), "suite {suite} failed");
        let doc = stdout_json(&out);
        assert_eq!(doc["verdicts"][suite], "pass");
    }
}

#[test]
fn verify_with_user_graph() {
    let out = run(&[
        "verify",
        "--suite",
        "macdonald",
        "--input",
        &fixture("cusp5"),
        "--order",
        "5",
    ]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["verdicts"]["user-graph"], "pass");
}

#[test]
fn output_is_byte_deterministic() {
    let args = ["zeta", "--input", &fixture("cusp3"), "--order", "5"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let margs = ["motivic", "--input", &fixture("a5"), "--order", "4"];
    assert_eq!(run(&margs).stdout, run(&margs).stdout);
}

#[test]
fn missing_input_is_an_error() {
    let out = run(&["zeta"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_json(&out)["reason"].as_str().unwrap().contains("no input"));
}
