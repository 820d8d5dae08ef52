use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_fpure"))
        .args(args)
        .arg("--no-timing")
        .output()
        .expect("spawn fpure");
    let json = serde_json::from_slice(&out.stdout).expect("JSON on stdout");
    (out.status.code().unwrap(), json)
}

#[test]
fn e8_fedder_witness() {
    let (code, v) = run(&["fedder-fpure", "--input", &data("e8.json"), "--q", "7"]);
    assert_eq!(code, 0);
    let cert = &v["verdicts"][0];
    assert_eq!(cert["holds"], true);
    assert_eq!(cert["verified"], true);
    assert_eq!(cert["witness"]["monomial"], "x^6*y^6*z^6");
    assert_eq!(cert["witness"]["coefficient"], 4);
    assert_eq!(cert["exponents_used"], serde_json::json!([1]));
    assert_eq!(v["aggregate"], true);
    assert_eq!(v["input_digest"].as_str().unwrap().len(), 64);
    assert!(v["elapsed_ms"].is_null());
}

#[test]
fn monomial_threshold_value() {
    let (code, v) = run(&["fpt-monomial", "--input", &data("d3.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"], "3/2");
}

#[test]
fn parse_error_reports_position() {
    let (code, v) = run(&["gb", "--input", &data("bad.json")]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "parse");
    assert_eq!(v["error"]["position"], 4);
    assert_eq!(v["error"]["ideal"], "J");
    assert_eq!(v["error"]["generator"], 1);
    assert!(v["input_digest"].is_string());
}

#[test]
fn failing_verdict_exits_one() {
    let (code, v) = run(&["fedder-fpure", "--input", &data("d3.json"), "--q", "2"]);
    assert_eq!(code, 1);
    assert_eq!(v["verdicts"][0]["holds"], false);
    assert!(v["verdicts"][0]["witness"].is_null());
}

#[test]
fn resource_limit_exits_three() {
    let (code, v) = run(&["contain", "--input", &data("power-cap.json")]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "resource");
}

#[test]
fn sfr_witness_form() {
    let (code, v) = run(&["fedder-sfr", "--input", &data("line.json"), "--q", "7"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdicts"][0]["witness"]["monomial"], "x^5");
    assert_eq!(v["verdicts"][0]["convention"], "ceil");
    let (code, _) = run(&["fedder-sfr", "--input", &data("line.json"), "--q", "7", "--c", "x^3"]);
    assert_eq!(code, 1);
    let (code, v) = run(&["fedder-sfr", "--input", &data("line.json"), "--q", "7", "--convention", "floor"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdicts"][0]["exponents_used"], serde_json::json!([3]));
}

#[test]
fn q_range_from_file() {
    let (code, v) = run(&["contain", "--input", &data("triangle.json")]);
    assert_eq!(code, 0);
    let qs: Vec<_> = v["verdicts"].as_array().unwrap().iter().map(|c| c["q"].as_u64().unwrap()).collect();
    assert_eq!(qs, vec![2, 4]);
    assert!(!v["notes"].as_array().unwrap().is_empty());
}

#[test]
fn lex_basis() {
    let (code, v) = run(&["gb", "--input", &data("lex.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["J"], serde_json::json!(["x - y^2", "y^3 - 1"]));
}

#[test]
fn fpt_bounds_levels() {
    let (code, v) = run(&["fpt-bounds", "--input", &data("d3.json"), "--emax", "3"]);
    assert_eq!(code, 0);
    let bounds: Vec<_> = v["verdicts"].as_array().unwrap().iter().map(|l| l["lower_bound"].as_str().unwrap().to_string()).collect();
    assert_eq!(bounds, vec!["1/2", "1/1", "5/4"]);
    assert_eq!(v["result"]["exact"], "3/2");
}

#[test]
fn repeated_runs_are_identical() {
    let args = ["nu", "--input", &data("e8.json"), "--emax", "2"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a, b);
}

#[test]
fn text_format() {
    let out = Command::new(env!("CARGO_BIN_EXE_fpure"))
        .args(["fpt-monomial", "--input", &data("d3.json"), "--format", "text"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("3/2"));
    assert!(text.contains("aggregate: true"));
}

#[test]
fn usage_errors() {
    let (code, v) = run(&["nu"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "usage");
    let (code, _) = run(&["fedder-fpure", "--input", &data("e8.json"), "--q", "7", "--emax", "2"]);
    assert_eq!(code, 2);
}
