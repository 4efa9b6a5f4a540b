//! End-to-end CLI checks: exit codes, JSON determinism, and the
//! verify-paper harness including its self-test.

use std::process::{Command, Output};

fn monadica(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monadica"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn analyze_emits_deterministic_json() {
    let first = monadica(&["analyze", "X*(X-1)*(X-2)"]);
    assert!(first.status.success());
    let second = monadica(&["analyze", "X*(X-1)*(X-2)"]);
    assert_eq!(first.stdout, second.stdout, "byte-identical reruns");
    let json: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(json["schema"], "monadica/1");
    assert_eq!(json["class_group"]["rank"], 4);
    // reserialization of the parsed value is stable
    let report: monadica::report::Report = serde_json::from_slice(&first.stdout).unwrap();
    let again = serde_json::to_string(&report).unwrap();
    assert_eq!(again.as_bytes(), &first.stdout[..first.stdout.len() - 1]);
}

#[test]
fn analyze_routes_fractional_generators() {
    let out = monadica(&["analyze", "(X*(X-1)^2*(X-2))/12"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["submonoid"]["class_group"]["torsion"][0], "2");
    assert_eq!(json["submonoid"]["class_group"]["rank"], 0);
    assert_eq!(json["factorial"], false);
}

#[test]
fn analyze_constant() {
    let out = monadica(&["analyze", "7"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["factorial"], true);
    assert_eq!(json["context"]["primes"][0], 7);
}

#[test]
fn exit_codes() {
    assert_eq!(monadica(&["analyze", "Y"]).status.code(), Some(2));
    assert_eq!(monadica(&["analyze", "X/2"]).status.code(), Some(2));
    // degree beyond the factorizer cap
    let big = "X(X-1)(X-2)(X-3)(X-4)(X-5)(X-6)(X-7)(X-8)(X-9)(X-10)(X-11)(X-12)";
    let expanded = {
        let parsed = monadica::zpoly::parse::parse_poly(big).unwrap();
        parsed.poly.numerator().to_string().replace(' ', "")
    };
    assert_eq!(monadica(&["analyze", &expanded]).status.code(), Some(3));
    // manual atom bound too low
    assert_eq!(
        monadica(&["analyze", "X(X-1)(X-2)", "--atom-degree-bound", "4"]).status.code(),
        Some(4)
    );
    // submonoid membership failure
    assert_eq!(
        monadica(&["submonoid", "X(X-1)(X-2)", "X/3"]).status.code(),
        Some(5)
    );
}

#[test]
fn submonoid_command_matches_fractional_analyze() {
    let direct = monadica(&["analyze", "(X*(X-1)^2*(X-2))/12"]);
    let viasub = monadica(&["submonoid", "X(X-1)(X-2)", "(X*(X-1)^2*(X-2))/12"]);
    assert!(direct.status.success() && viasub.status.success());
    let a: serde_json::Value = serde_json::from_slice(&direct.stdout).unwrap();
    let b: serde_json::Value = serde_json::from_slice(&viasub.stdout).unwrap();
    assert_eq!(a["submonoid"], b["submonoid"]);
}

#[test]
fn submonoid_t_has_rank_one() {
    let out = monadica(&["submonoid", "X(X-1)(X-2)", "(X(X-1)^3(X-2)^3)/24"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["submonoid"]["class_group"]["rank"], 1);
    assert_eq!(json["submonoid"]["class_group"]["torsion"].as_array().unwrap().len(), 0);
}

#[test]
fn unit_and_degenerate_inputs() {
    let out = monadica(&["analyze", "1"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["factorial"], true);
    assert_eq!(json["atoms"]["list"].as_array().unwrap().len(), 0);
    assert_eq!(monadica(&["analyze", "0"]).status.code(), Some(2));
    // generator equal to the ambient: the submonoid view keeps every prime
    let out = monadica(&["submonoid", "X(X-1)(X-2)", "X(X-1)(X-2)"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["submonoid"]["avoided"].as_array().unwrap().len(), 0);
    assert_eq!(json["submonoid"]["class_group"]["rank"], 4);
}

#[test]
fn profiles_and_atoms_subcommands() {
    let out = monadica(&["profiles", "X(X-1)(X-2)"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["context"]["profiles"][0]["p"], 2);
    let out = monadica(&["atoms", "X(X-1)(X-2)"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["atoms"]["list"].as_array().unwrap().len(), 10);
    assert_eq!(json["atoms"]["certified"], true);
}

#[test]
fn invariants_schedule() {
    let out = monadica(&["invariants", "--family", "theorem68", "--max-i", "2"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json[0]["davenport"], 2);
    assert_eq!(json[1]["davenport"], 3);
    assert_eq!(json[1]["elasticity_lb"], "3/2");
    assert_eq!(json[1]["tame_lb"], 3);
}

#[test]
fn verify_paper_passes_and_selftest_fails() {
    let out = monadica(&["verify-paper", "--only", "ex61"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("PASS ex61-class-group"));
    // the corrupted harness must fail with a diff and exit 1
    let out = monadica(&["verify-paper", "--only", "class-group", "--corrupt"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("FAIL ex61-class-group"), "{}", text);
    assert!(text.contains("got 4, want 5"), "{}", text);
}

#[test]
fn pretty_output_is_text() {
    let out = monadica(&["analyze", "X(X-1)(X-2)", "--pretty"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("class group: Z^4"));
    assert!(text.contains("P_9"));
}
