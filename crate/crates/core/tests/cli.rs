use std::path::Path;
use std::process::{Command, Output};

use homnambu::cli::{fixtures, Model};
use homnambu::linalg::Covector;
use homnambu::scalars::Scalar;

fn homnambu(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homnambu"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write_fixture(dir: &Path, name: &str) -> String {
    let path = dir.join(format!("{name}.json"));
    std::fs::write(&path, fixtures::get(name).unwrap()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn gl2_classical_jacobi_holds() {
    let o = homnambu(&["check", "--input", "fixture:gl2", "--map", "id", "--check", "hom-jacobi"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("hom-jacobi[id]: holds"));
}

#[test]
fn ex2_constraints_are_necessary() {
    let o = homnambu(&["check", "--input", "fixture:ex2_4dim", "--ignore-constraints"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("hom-jacobi[alpha]: FAILS at ("));
    let o = homnambu(&["check", "--input", "fixture:ex2_4dim"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("constraints applied: b13 = b12 + b23"));
}

#[test]
fn induced_document_round_trips_and_passes_hom_nambu() {
    let dir = tempfile::tempdir().unwrap();
    for (name, bracket) in [
        ("ex3_3dim", "[x1, x2, x3]: a3*t*x2 + a4*t*x3"),
        ("ex4_3dim", "[x1, x2, x3]: a4*t*x2 + a5*t*x3"),
    ] {
        let out = dir.path().join(format!("{name}_induced.json"));
        let out = out.to_str().unwrap();
        let o = homnambu(&["induce", "--input", &format!("fixture:{name}"), "--out", out]);
        assert_eq!(code(&o), 0, "{}", stdout(&o));
        assert!(stdout(&o).contains(bracket), "{}", stdout(&o));
        let text = std::fs::read_to_string(out).unwrap();
        assert_eq!(Model::parse_json(&text).unwrap().to_json(), text);
        let o = homnambu(&["check", "--input", out]);
        assert_eq!(code(&o), 0, "{}", stdout(&o));
        assert!(stdout(&o).contains("hom-nambu: holds"));
    }
}

#[test]
fn gl2_induced_bracket() {
    let o = homnambu(&["induce", "--input", "fixture:gl2", "--functional", "tr"]);
    assert_eq!(code(&o), 0);
    let m = Model::parse_json(&stdout(&o)).unwrap();
    let t = m.ternary().unwrap();
    let v: Vec<String> = t.structure_constants(0, 1, 2).iter().map(|s| s.to_string()).collect();
    assert_eq!(v, ["1", "0", "0", "-1"]);
}

#[test]
fn induce_refuses_failing_hypotheses_unless_forced() {
    // The covector picking out the E11 entry does not vanish on [E12, E21].
    let dir = tempfile::tempdir().unwrap();
    let mut m = Model::parse_json(fixtures::get("gl2").unwrap()).unwrap();
    let e11 = Covector::new(vec![Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::zero()]);
    m.functionals.insert("tr".into(), e11);
    let path = dir.path().join("bad_trace.json");
    std::fs::write(&path, m.to_json()).unwrap();
    let path = path.to_str().unwrap().to_string();
    let o = homnambu(&["induce", "--input", &path, "--functional", "tr"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("trace[tr]: FAILS"));
    assert!(!stdout(&o).contains("\"kind\""));
    let o = homnambu(&["induce", "--input", &path, "--functional", "tr", "--force"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("\"kind\": \"ternary\""));
}

#[test]
fn classify_examples() {
    let o = homnambu(&["classify", "--input", "fixture:ex1_gl2"]);
    assert!(stdout(&o).contains("classification: nondegenerate, C1"));
    let o = homnambu(&["classify", "--input", "fixture:ex2_4dim"]);
    assert!(stdout(&o).contains("classification: nondegenerate, C2"));
    let o = homnambu(&["classify", "--input", "fixture:ex2_4dim", "--functional", "zero"]);
    assert!(stdout(&o).contains("classification: degenerate: ker τ = V"));
    assert_eq!(code(&o), 0);
}

#[test]
fn solve_beta_dimensions() {
    let o = homnambu(&["solve-beta", "--input", "fixture:ex1_gl2"]);
    assert!(stdout(&o).contains("dimension: 1\n"));
    assert!(stdout(&o).contains("alpha in space: yes"));
    let o = homnambu(&["solve-beta", "--input", "fixture:ex2_4dim"]);
    assert!(stdout(&o).contains("dimension: 12\n"));
    let o = homnambu(&["solve-beta", "--input", "fixture:sl2", "--functional", "zero"]);
    assert!(stdout(&o).contains("dimension: 9\n"));
}

#[test]
fn twist_commands() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("n4_minus.json");
    let out = out.to_str().unwrap();
    let o = homnambu(&["twist", "--input", "fixture:n4", "--map", "minus", "--out", out]);
    assert_eq!(code(&o), 0);
    let m = Model::parse_json(&std::fs::read_to_string(out).unwrap()).unwrap();
    let v: Vec<String> = m.ternary().unwrap().structure_constants(0, 1, 2).iter().map(|s| s.to_string()).collect();
    assert_eq!(v, ["0", "0", "0", "-1"]);
    assert_eq!(code(&homnambu(&["check", "--input", out])), 0);
    assert_eq!(code(&homnambu(&["twist", "--input", out, "--map", "minus"])), 2);

    let o = homnambu(&["twist", "--input", "fixture:n4", "--map", "id"]);
    assert_eq!(code(&o), 0);
    let twisted = Model::parse_json(&stdout(&o)).unwrap();
    let original = Model::parse_json(fixtures::get("n4").unwrap()).unwrap();
    assert_eq!(twisted.ternary().unwrap().structure_constants(0, 1, 2), original.ternary().unwrap().structure_constants(0, 1, 2));

    let o = homnambu(&["twist", "--input", "fixture:n4", "--map", "double"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("not an endomorphism"));
}

#[test]
fn jacobian_commands() {
    let o = homnambu(&["jacobian", "bracket", "x1", "x2", "x3"]);
    assert_eq!(stdout(&o).lines().nth(1), Some("bracket: 1"));
    let o = homnambu(&["jacobian", "fi-check", "x1", "x1^2", "x2", "x2*x3", "x3^2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("fundamental-identity: holds"));
    let o = homnambu(&["jacobian", "twist-check", "--gamma", "x1 + x2^2, x2, x3"]);
    assert_eq!(code(&o), 0);
    let o = homnambu(&["jacobian", "twist-check", "--gamma", "2*x1, x2, x3"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn worked_examples_suite_passes() {
    let o = homnambu(&["examples", "--all-paper-examples"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAILS"));
}

#[test]
fn format_is_idempotent_and_output_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    for f in fixtures::ALL {
        let path = write_fixture(dir.path(), f.name);
        let o = homnambu(&["format", "--input", &path]);
        assert_eq!(code(&o), 0);
        assert_eq!(stdout(&o), f.text, "{}", f.name);
    }
    let a = homnambu(&["check", "--input", "fixture:ex2_4dim", "--check", "compat", "--format", "json"]);
    let b = homnambu(&["check", "--input", "fixture:ex2_4dim", "--check", "compat", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_and_validation_errors_exit_2() {
    assert_eq!(code(&homnambu(&["check", "--input", "missing.json"])), 2);
    assert_eq!(code(&homnambu(&["check", "--input", "fixture:gl2", "--map", "rho"])), 2);
    assert_eq!(code(&homnambu(&["check", "--input", "fixture:gl2", "--check", "bogus"])), 2);
    assert_eq!(code(&homnambu(&["frobnicate"])), 2);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"kind": "binary", "dim": 1, "basis": ["x"], "brackets": [{"args": ["x", "y"], "value": []}]}"#)
        .unwrap();
    let o = homnambu(&["check", "--input", path.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("brackets[0]"));
}

#[test]
fn set_assigns_parameters() {
    let o = homnambu(&["induce", "--input", "fixture:ex3_3dim", "--set", "t=2", "--set", "a3=1"]);
    assert_eq!(code(&o), 0);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("[x1, x2, x3]: 2*x2 + 2*a4*x3"), "{err}");
    assert_eq!(code(&homnambu(&["check", "--input", "fixture:gl2", "--set", "nope=1"])), 2);
}
