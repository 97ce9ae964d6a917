use homnambu_web::{check, example, example_names, induce, jacobian};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn lists_examples() {
    let names = parse(&example_names());
    assert!(names.as_array().unwrap().iter().any(|n| n == "ex2_4dim"));
    assert!(example("n4").contains("\"ternary\""));
    assert_eq!(example("missing"), "");
}

#[test]
fn check_reports_constraints_effect() {
    let doc = example("ex2_4dim");
    assert_eq!(parse(&check(&doc, "hom-jacobi", true))["ok"], true);
    let v = parse(&check(&doc, "hom-jacobi", false));
    assert_eq!(v["ok"], false);
    assert!(v["text"].as_str().unwrap().contains("FAILS"));
}

#[test]
fn induce_returns_document() {
    let v = parse(&induce(&example("ex4_3dim"), true));
    assert_eq!(v["ok"], true);
    assert!(v["text"].as_str().unwrap().contains("[x1, x2, x3]: a4*t*x2 + a5*t*x3"));
    let doc = v["document"].as_str().unwrap();
    assert_eq!(parse(&check(doc, "", true))["ok"], true);
}

#[test]
fn jacobian_bracket_and_errors() {
    assert_eq!(parse(&jacobian("x1", "x2", "x3"))["bracket"], "1");
    assert_eq!(parse(&jacobian("x1*x2", "x2", "x3"))["bracket"], "x2");
    assert!(parse(&jacobian("x1 +", "x2", "x3"))["error"].is_string());
    assert!(parse(&check("{", "", true))["error"].is_string());
}
