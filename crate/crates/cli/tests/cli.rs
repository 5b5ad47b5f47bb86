use octoplane_cli::{run, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn json(args: &[&str]) -> Value {
    let out = run(std::iter::once("octoplane")
        .chain(args.iter().copied())
        .chain(["--json"]));
    assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(std::iter::once("octoplane").chain(args.iter().copied())).code
}

#[test]
fn octonion_table_is_signed_permutation() {
    let t = json(&["table", "--level", "3"]);
    assert_eq!(t["level"], 3);
    assert_eq!(t["basis"].as_array().unwrap().len(), 8);
    let rows = t["table"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[1][4], serde_json::json!({"sign": 1, "index": 5}));
}

#[test]
fn check_reports_witness_and_seed() {
    let r = json(&["check", "--property", "associative", "--level", "3", "--seed", "7"]);
    assert_eq!(r["verdict"], "fails");
    assert_eq!(r["matches_expectation"], true);
    assert_eq!(r["seed"], 7);
    assert_eq!(
        r["counterexample"][2],
        serde_json::json!({"level": 3, "coords": ["0", "0", "0", "0", "1", "0", "0", "0"]})
    );
}

#[test]
fn op2_cohomology_json() {
    let c = json(&["cohomology", "--space", "OP2", "--coeffs", "Z"]);
    let groups = c["groups"].as_array().unwrap();
    assert_eq!(groups.len(), 17);
    for g in groups {
        let k = g["degree"].as_u64().unwrap();
        let rank = if [0, 8, 16].contains(&k) { 1 } else { 0 };
        assert_eq!(g["group"], serde_json::json!({"rank": rank, "torsion": []}));
    }
    let m = json(&["cohomology", "--space", "RP2", "--coeffs", "Zmod:2"]);
    assert!(m["groups"]
        .as_array()
        .unwrap()
        .iter()
        .all(|g| g["group"]["torsion"] == serde_json::json!([2])));
}

#[test]
fn hopf_modes_are_labelled_proxies() {
    let b = json(&["hopf", "--mode", "bidegree", "--level", "3", "--samples", "50"]);
    assert_eq!(b["hopf_invariant"], 1);
    assert_eq!(b["method"], "bidegree");
    assert!(b["proxy"].as_str().unwrap().starts_with("proxy"));
    let l = json(&["hopf", "--mode", "linking", "--segments", "128", "--seed", "3"]);
    assert_eq!(l["hopf_invariant"].as_i64().unwrap().abs(), 1);
    assert_eq!(l["method"], "linking");
}

#[test]
fn chart_and_equivalence_reports() {
    let r = json(&["chart-roundtrip", "--level", "4", "--samples", "100", "--seed", "1"]);
    assert_eq!(r["verdict"], "pass");
    assert_eq!(r["samples"], 100);
    assert!(r["max_error"].as_f64().unwrap() < 1e-9);
    let e = json(&["equiv-check", "--level", "8", "--samples", "100"]);
    assert_eq!(e["verdict"], "pass");
    assert_eq!(e["separation_failures"], 0);
}

#[test]
fn zero_divisors_by_level() {
    assert_eq!(json(&["zero-divisors", "--level", "3"])["count"], 0);
    let z = json(&["zero-divisors", "--level", "4"]);
    assert!(z["count"].as_u64().unwrap() > 0);
    assert_eq!(z["verified"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["audit-all", "--samples", "20"]), EXIT_OK);
    assert_eq!(code(&["frobnicate"]), EXIT_USAGE);
    assert_eq!(code(&["check", "--property", "commutative-ish"]), EXIT_USAGE);
    assert_eq!(code(&["table", "--level", "7"]), EXIT_USAGE);
    assert_eq!(code(&["chart-roundtrip", "--level", "3"]), EXIT_USAGE);
    assert_eq!(code(&["cohomology", "--space", "KP2"]), EXIT_USAGE);
    assert_eq!(code(&["cohomology", "--coeffs", "Zmod:1"]), EXIT_USAGE);
    assert_eq!(code(&["hopf", "--mode", "linking", "--segments", "16"]), EXIT_USAGE);
    assert_eq!(code(&["hopf", "--level", "4"]), EXIT_USAGE);
    assert_eq!(code(&["table", "--tol", "0"]), EXIT_USAGE);
    assert_eq!(code(&["--help"]), EXIT_OK);
    // an impossible tolerance turns a passing check into a mismatch
    assert_eq!(
        code(&["chart-roundtrip", "--level", "8", "--samples", "20", "--tol", "1e-300"]),
        EXIT_MISMATCH
    );
}

#[test]
fn same_seed_same_bytes() {
    let a = run(["octoplane", "equiv-check", "--samples", "50", "--seed", "9", "--json"]);
    let b = run(["octoplane", "equiv-check", "--samples", "50", "--seed", "9", "--json"]);
    assert_eq!(a, b);
}
