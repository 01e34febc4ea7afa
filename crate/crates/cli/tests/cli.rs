use serde_json::Value;
use tetra_cli::report::Report;
use tetra_cli::{run, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};

fn json(args: &[&str]) -> (Report, i32) {
    let mut argv = vec!["--format", "json"];
    argv.extend_from_slice(args);
    let out = run(argv);
    (serde_json::from_str(&out.stdout).expect("JSON report"), out.code)
}

#[test]
fn classify_reports_flags() {
    let (r, code) = json(&["classify", "10,1,2,3,10,1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(r.command, "classify");
    assert_eq!(r.result["acm"], true);
    assert_eq!(r.result["componentwise_linear"], true);
    assert_eq!(r.result["regularity"], 23);
}

#[test]
fn betti_matches_display() {
    let (r, code) = json(&["betti", "1,3,4,2,3,0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(r.result["resolution"], "0 → R(-9) ⊕ R(-8)^3 → R(-8) ⊕ R(-7) ⊕ R(-6)^3 → J → 0");
    let entries = &r.result["table"]["entries"];
    assert_eq!(entries[0], serde_json::json!([0, 6, 3]));
}

#[test]
fn text_and_json_carry_the_same_numbers() {
    let text = run(["betti", "7,5,5,2,1,6"]).stdout;
    let (r, _) = json(&["betti", "7,5,5,2,1,6"]);
    for e in r.result["table"]["entries"].as_array().unwrap() {
        let e: Vec<u64> = serde_json::from_value(e.clone()).unwrap();
        assert!(text.contains(&format!("[{}, {}, {}]", e[0], e[1], e[2])), "{text}");
    }
    assert!(text.contains(r.result["resolution"].as_str().unwrap()));
}

#[test]
fn enumerate_linear_for_two_lines() {
    let (r, code) = json(&["enumerate-linear", "1,0,0,0,0,1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(r.result["count"], 8);
    let (r, code) = json(&["enumerate-linear", "2,1,0,0,0,1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(r.result["error"].as_str().unwrap().contains("not a minimal curve"));
}

#[test]
fn gin_with_oracle_check() {
    let (r, code) = json(&["gin", "1,2,2,2,1,2", "--oracle-check", "--seed", "4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(r.result["oracle_agrees"], true);
    assert_eq!(r.result["gin"], serde_json::json!(["a^4", "a^3*b", "a^2*b^3", "a*b^4", "b^6"]));
    assert_eq!(r.provenance.primes, Some(vec![32003, 65521]));
    let (r, code) = json(&["gin", "4,1,2,1,1,5"]);
    assert_eq!((code, &r.result["supported"]), (EXIT_OK, &Value::Bool(false)));
}

#[test]
fn hilbert_needs_a_large_enough_bound() {
    let (r, code) = json(&["hilbert", "2,0,1,1,0,2", "--upto", "10"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(r.result["degree"], 8);
    let (_, code) = json(&["hilbert", "2,0,1,1,0,2", "--upto", "2"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn usage_errors_are_one_line() {
    let out = run(["classify", "3,3,3"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert_eq!(out.stderr.trim_end().lines().count(), 1);
    assert!(out.stdout.is_empty());
    assert_eq!(run(["verify", "--suite", "nope"]).code, EXIT_USAGE);
    assert_eq!(run(["verify", "--suite", "gin", "--prime", "32001"]).code, EXIT_USAGE);
    assert_eq!(run(["--help"]).code, EXIT_OK);
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--suite", "all", "--bound", "4", "--seed", "9"];
    let (a, code) = json(&args);
    let (b, _) = json(&args);
    assert_eq!(code, EXIT_OK);
    assert_eq!(a.result, b.result);
    assert_eq!(a.result["suites"].as_array().unwrap().len(), 8);
}

#[test]
fn oracle_mismatch_exit_code_is_reserved() {
    // nothing in range disagrees, so the mismatch code never appears here
    let (_, code) = json(&["betti", "4,1,2,1,1,5", "--oracle-check"]);
    assert_ne!(code, EXIT_MISMATCH);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_tetra");
    let ok = std::process::Command::new(bin).args(["classify", "1,0,0,0,0,1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = std::process::Command::new(bin).args(["classify", "1,0"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert_eq!(String::from_utf8_lossy(&bad.stderr).trim_end().lines().count(), 1);
}
