use std::path::PathBuf;
use std::process::Command;

use jsonschema::JSONSchema;
use serde_json::Value;

fn schema(name: &str) -> JSONSchema {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/schema").join(format!("{name}.schema.json"));
    let raw = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let v: Value = serde_json::from_str(&raw).unwrap();
    JSONSchema::compile(&v).expect("schema compiles")
}

fn output(args: &[&str]) -> Value {
    let out = Command::new(env!("CARGO_BIN_EXE_bethe-lab"))
        .args(args)
        .args(["--seed", "3", "--format", "json"])
        .output()
        .unwrap();
    serde_json::from_slice(&out.stdout).unwrap()
}

fn assert_valid(s: &JSONSchema, v: &Value) {
    if let Err(errors) = s.validate(v) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("schema violations: {msgs:#?}");
    }
}

#[test]
fn hamiltonian_output() {
    assert_valid(&schema("hamiltonian"), &output(&["hamiltonian", "--N", "2", "--n", "2"]));
}

#[test]
fn bethe_output() {
    assert_valid(&schema("bethe"), &output(&["bethe", "--N", "2", "--n", "2", "--orders", "2,3"]));
}

#[test]
fn cm_outputs() {
    let s = schema("cm");
    assert_valid(&s, &output(&["cm", "--N", "2", "--n", "3"]));
    assert_valid(&s, &output(&["cm", "--N", "2", "--n", "2", "--operator", "--orders", "2,2"]));
}

#[test]
fn verify_and_reports() {
    let v = output(&["verify", "--N", "2", "--n", "2", "--orders", "3,3", "--timings"]);
    assert_valid(&schema("verify"), &v);
    let report = schema("report");
    for r in v["reports"].as_array().unwrap() {
        assert_valid(&report, r);
        assert!(r["elapsed_ms"].is_number());
    }
    assert_valid(&schema("verify"), &output(&["example"]));
}

#[test]
fn failing_report_validates() {
    let v = output(&["verify", "--N", "2", "--n", "2", "--check", "polynomiality", "--word", "Y^3", "--degree", "2"]);
    assert_eq!(v["passed"], false);
    let r = &v["reports"][0];
    assert!(r["first_residual"].is_object());
    assert_valid(&schema("report"), r);
}

#[test]
fn schemas_reject_bad_rationals() {
    let s = schema("hamiltonian");
    let bad = serde_json::json!({"command": "hamiltonian", "config": {}, "H": [{"dim": 1, "entries": [[0, 0, "1.5"]]}]});
    assert!(!s.is_valid(&bad));
}
