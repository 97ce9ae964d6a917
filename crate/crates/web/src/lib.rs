//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every entry point takes and returns strings. Results are JSON objects;
//! failures come back as `{"error": "..."}` so the page needs no exception
//! handling.

use homnambu::cli::{cmd_check, cmd_induce, cmd_jacobian, fixtures, CheckKind, JacobianCommand, Model, TripleNames};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn error_json(e: impl std::fmt::Display) -> String {
    json!({ "error": e.to_string() }).to_string()
}

fn load(document: &str, apply_constraints: bool) -> homnambu::Result<Model> {
    let m = Model::parse_json(document)?;
    if apply_constraints {
        Ok(m.constrained()?.0)
    } else {
        Ok(m)
    }
}

/// Names of the built-in example documents.
#[wasm_bindgen]
pub fn example_names() -> String {
    let names: Vec<&str> = fixtures::ALL.iter().map(|f| f.name).collect();
    json!(names).to_string()
}

/// The JSON text of a built-in example, or an empty string.
#[wasm_bindgen]
pub fn example(name: &str) -> String {
    fixtures::get(name).unwrap_or_default().to_string()
}

/// Runs comma-separated checks (empty for the defaults) and returns the
/// report with `"text"` and `"report"` fields.
#[wasm_bindgen]
pub fn check(document: &str, checks: &str, apply_constraints: bool) -> String {
    let run = || -> homnambu::Result<String> {
        let m = load(document, apply_constraints)?;
        let kinds = checks
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(CheckKind::parse)
            .collect::<homnambu::Result<Vec<_>>>()?;
        let r = cmd_check("check", &m, &[], None, &kinds)?;
        Ok(json!({ "ok": r.all_hold(), "text": r.render_text(), "report": r }).to_string())
    };
    run().unwrap_or_else(error_json)
}

/// Induces the ternary algebra with the default names (`tau`, `alpha`,
/// `beta`). Returns the report text and, when the hypotheses hold, the
/// induced document.
#[wasm_bindgen]
pub fn induce(document: &str, apply_constraints: bool) -> String {
    let run = || -> homnambu::Result<String> {
        let m = load(document, apply_constraints)?;
        let (r, out) = cmd_induce("induce", &m, &TripleNames::default(), false)?;
        Ok(json!({
            "ok": r.all_hold(),
            "text": r.render_text(),
            "document": out.map(|d| d.to_json()),
        })
        .to_string())
    };
    run().unwrap_or_else(error_json)
}

/// The Jacobian bracket of three polynomials in `x1, x2, x3`.
#[wasm_bindgen]
pub fn jacobian(f: &str, g: &str, h: &str) -> String {
    let polys = [f, g, h].map(str::to_string);
    match cmd_jacobian("jacobian bracket", JacobianCommand::Bracket, &polys, None) {
        Ok(r) => json!({ "bracket": r.facts[0].value }).to_string(),
        Err(e) => error_json(e),
    }
}
