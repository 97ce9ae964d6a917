//! Command implementations behind the `homnambu` binary.
//!
//! Every command is a plain function returning a [`RunReport`] (and, for
//! commands that produce one, a new document), so the binary only parses
//! arguments and does I/O.

#[cfg(feature = "cli")]
pub mod args;
pub mod document;
pub mod fixtures;
pub mod report;
pub mod suite;

pub use document::{Algebra, Document, Kind, Model};
pub use report::{CheckLine, RunReport};

use crate::algebras::{check_binary_endomorphism, check_hom_jacobi, check_trace_function};
use crate::compat::{
    check_kernel_stability, classify_triple, compatibility_conditions, solve_beta_space, CompatTriple,
};
use crate::error::{Error, Result};
use crate::jacobian::{
    check_fundamental_identity, check_fundamental_identity_exhaustive, check_twisted_hom_nambu,
    det_jacobian, jacobian_bracket, PolyMap, TriPoly,
};
use crate::linalg::Matrix;
use crate::scalars::{parse_scalar, Bindings, Scalar};
use crate::ternary::{
    check_hom_nambu, check_ternary_endomorphism, check_ternary_skew_equivalence, induce_ternary,
    twist_by_endomorphism,
};

/// Exit status for usage and validation errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Skew,
    HomJacobi,
    Trace,
    HomNambu,
    Endo,
    Compat,
}

impl CheckKind {
    pub fn parse(name: &str) -> Result<CheckKind> {
        Ok(match name {
            "skew" => CheckKind::Skew,
            "hom-jacobi" => CheckKind::HomJacobi,
            "trace" => CheckKind::Trace,
            "hom-nambu" => CheckKind::HomNambu,
            "endo" => CheckKind::Endo,
            "compat" => CheckKind::Compat,
            other => return Err(Error::UnknownName(other.to_string())),
        })
    }
}

/// How a document is prepared before a command runs.
#[derive(Clone, Debug, Default)]
pub struct Prepare {
    pub ignore_constraints: bool,
    /// `name=expression` assignments applied after the constraints.
    pub set: Vec<String>,
}

/// Reads a document from a path, or from the built-in library with
/// `fixture:NAME`.
pub fn load_input(input: &str) -> Result<Model> {
    let text = match input.strip_prefix("fixture:") {
        Some(name) => fixtures::get(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))?
            .to_string(),
        None => std::fs::read_to_string(input).map_err(|e| Error::Document {
            location: input.to_string(),
            message: e.to_string(),
        })?,
    };
    Model::parse_json(&text)
}

/// Applies constraints and `--set` assignments, recording what was done.
pub fn prepare(model: &Model, opts: &Prepare, report: &mut RunReport) -> Result<Model> {
    let mut m = model.clone();
    if !m.constraints.is_empty() {
        if opts.ignore_constraints {
            report.note(format!("{} constraint(s) not applied", m.constraints.len()));
        } else {
            let (c, bindings) = m.constrained()?;
            m = c;
            let applied: Vec<String> = bindings.iter().map(|(k, v)| format!("{k} = {v}")).collect();
            report.note(format!("constraints applied: {}", applied.join(", ")));
        }
    }
    if !opts.set.is_empty() {
        let mut bindings = Bindings::new();
        for (i, a) in opts.set.iter().enumerate() {
            let (name, value) = a.split_once('=').ok_or_else(|| Error::Document {
                location: format!("--set[{i}]"),
                message: format!("expected NAME=VALUE, got `{a}`"),
            })?;
            let name = name.trim();
            if !m.params.iter().any(|p| p == name) {
                return Err(Error::UndeclaredParameter(name.to_string()));
            }
            bindings.insert(name.to_string(), parse_scalar(value, &m.params)?);
        }
        let constraints = m.constraints.clone();
        m = m.substitute(&bindings)?;
        for (_, c) in constraints {
            let c = c.substitute(&bindings)?;
            // Rewritten so the stored text agrees with the substituted value.
            m.constraints.push((c.to_string(), c));
        }
        let set: Vec<String> = bindings.iter().map(|(k, v)| format!("{k} = {v}")).collect();
        report.note(format!("set: {}", set.join(", ")));
    }
    if let Some(p) = &m.provenance {
        report.note(format!("provenance: {p}"));
    }
    Ok(m)
}

/// `alpha` if the document defines it, else the identity.
pub fn default_alpha(m: &Model) -> String {
    if m.maps.contains_key("alpha") { "alpha" } else { "id" }.to_string()
}

/// `beta` if the document defines it, else `alpha`.
pub fn default_beta(m: &Model, alpha: &str) -> String {
    if m.maps.contains_key("beta") { "beta".to_string() } else { alpha.to_string() }
}

/// The given functional, else `tau`, else the only functional.
pub fn resolve_functional(m: &Model, given: Option<&str>) -> Result<String> {
    if let Some(g) = given {
        m.functional(g)?;
        return Ok(g.to_string());
    }
    if m.functionals.contains_key("tau") || m.functionals.len() != 1 {
        m.functional("tau")?;
        return Ok("tau".to_string());
    }
    Ok(m.functionals.keys().next().cloned().expect("one functional"))
}

fn triple(m: &Model, tau: &str, alpha: &str, beta: &str) -> Result<CompatTriple> {
    CompatTriple::new(m.map(alpha)?, m.map(beta)?, m.functional(tau)?)
}

/// Adds one line per compatibility condition. Returns whether all hold.
fn add_compat(r: &mut RunReport, m: &Model, t: &CompatTriple, names: [&str; 3]) -> Result<bool> {
    let [tau, alpha, beta] = names;
    let labels = [
        format!("tau-alpha[{tau},{alpha}]"),
        format!("tau-beta[{tau},{beta}]"),
        format!("alpha-beta[{alpha},{beta},{tau}]"),
    ];
    let mut ok = true;
    for (label, rep) in labels.iter().zip(compatibility_conditions(t)?) {
        let scalar = rep.residual.as_ref().is_some_and(|v| v.len() == 1);
        ok &= r.add_report(label.clone(), &rep, m.basis(), scalar);
    }
    Ok(ok)
}

/// `check`: runs the selected checkers. With no checks selected, binary
/// documents get hom-jacobi (plus trace when a functional resolves) and
/// ternary documents get hom-nambu.
pub fn cmd_check(
    command: &str,
    m: &Model,
    maps: &[String],
    functional: Option<&str>,
    checks: &[CheckKind],
) -> Result<RunReport> {
    let mut r = RunReport::new(command);
    let alpha = maps.first().cloned().unwrap_or_else(|| default_alpha(m));
    let beta = maps.get(1).cloned().unwrap_or_else(|| default_beta(m, &alpha));
    let mut checks = checks.to_vec();
    if checks.is_empty() {
        match m.kind() {
            Kind::Binary => {
                checks.push(CheckKind::HomJacobi);
                if resolve_functional(m, functional).is_ok() {
                    checks.push(CheckKind::Trace);
                }
            }
            Kind::Ternary => checks.push(CheckKind::HomNambu),
        }
    }
    let all_maps: Vec<String> = if maps.is_empty() { vec![alpha.clone()] } else { maps.to_vec() };
    let basis = m.basis().to_vec();
    for c in checks {
        match (c, &m.algebra) {
            (CheckKind::Skew, Algebra::Binary(a)) => {
                let tau_name = resolve_functional(m, functional)?;
                let rep = check_ternary_skew_equivalence(a, &m.functional(&tau_name)?)?;
                r.add_report(format!("skew[{tau_name}]"), &rep, &basis, false);
            }
            (CheckKind::Skew, Algebra::Ternary(_)) => {
                r.check(CheckLine::pass("skew"));
                r.note("ternary documents are skew-symmetric by construction");
            }
            (CheckKind::HomJacobi, Algebra::Binary(a)) => {
                for name in &all_maps {
                    let rep = check_hom_jacobi(a, &m.map(name)?)?;
                    r.add_report(format!("hom-jacobi[{name}]"), &rep, &basis, false);
                }
            }
            (CheckKind::Trace, Algebra::Binary(a)) => {
                let tau_name = resolve_functional(m, functional)?;
                let rep = check_trace_function(a, &m.functional(&tau_name)?)?;
                r.add_report(format!("trace[{tau_name}]"), &rep, &basis, true);
            }
            (CheckKind::HomNambu, Algebra::Binary(a)) => {
                let tau_name = resolve_functional(m, functional)?;
                let t = induce_ternary(a, &m.functional(&tau_name)?, &m.map(&alpha)?, &m.map(&beta)?)?;
                let rep = check_hom_nambu(&t)?;
                r.add_report(format!("hom-nambu[{tau_name};{alpha},{beta}]"), &rep, &basis, false);
            }
            (CheckKind::HomNambu, Algebra::Ternary(t)) => {
                let rep = check_hom_nambu(t)?;
                r.add_report("hom-nambu", &rep, &basis, false);
            }
            (CheckKind::Endo, Algebra::Binary(a)) => {
                for name in &all_maps {
                    let rep = check_binary_endomorphism(a, &m.map(name)?)?;
                    r.add_report(format!("endo[{name}]"), &rep, &basis, false);
                }
            }
            (CheckKind::Endo, Algebra::Ternary(t)) => {
                for name in &all_maps {
                    let rep = check_ternary_endomorphism(t, &m.map(name)?)?;
                    r.add_report(format!("endo[{name}]"), &rep, &basis, false);
                }
            }
            (CheckKind::Compat, _) => {
                let tau_name = resolve_functional(m, functional)?;
                let t = triple(m, &tau_name, &alpha, &beta)?;
                add_compat(&mut r, m, &t, [&tau_name, &alpha, &beta])?;
            }
            (CheckKind::HomJacobi | CheckKind::Trace, Algebra::Ternary(_)) => {
                return Err(Error::HypothesisFailure(
                    "hom-jacobi and trace apply to binary documents".into(),
                ));
            }
        }
    }
    Ok(r)
}

/// Names for the induce, classify and solve-beta commands.
#[derive(Clone, Debug, Default)]
pub struct TripleNames {
    pub tau: Option<String>,
    pub alpha: Option<String>,
    pub beta: Option<String>,
}

impl TripleNames {
    fn resolve(&self, m: &Model) -> Result<[String; 3]> {
        let tau = resolve_functional(m, self.tau.as_deref())?;
        let alpha = self.alpha.clone().unwrap_or_else(|| default_alpha(m));
        let beta = self.beta.clone().unwrap_or_else(|| default_beta(m, &alpha));
        m.map(&alpha)?;
        m.map(&beta)?;
        Ok([tau, alpha, beta])
    }
}

/// `induce`: the ternary document with bracket `[x,y,z]_τ` and twist
/// `(alpha, beta)`. Without `force`, nothing is produced when the trace or
/// a compatibility condition fails.
pub fn cmd_induce(command: &str, m: &Model, names: &TripleNames, force: bool) -> Result<(RunReport, Option<Model>)> {
    let mut r = RunReport::new(command);
    let a = m.binary()?;
    let [tau_name, alpha_name, beta_name] = names.resolve(m)?;
    let tau = m.functional(&tau_name)?;
    let (alpha, beta) = (m.map(&alpha_name)?, m.map(&beta_name)?);
    let trace = check_trace_function(a, &tau)?;
    let mut ok = r.add_report(format!("trace[{tau_name}]"), &trace, m.basis(), true);
    let t = CompatTriple::new(alpha.clone(), beta.clone(), tau.clone())?;
    ok &= add_compat(&mut r, m, &t, [&tau_name, &alpha_name, &beta_name])?;
    if !ok {
        if !force {
            r.note("no document produced; rerun with --force to induce anyway");
            return Ok((r, None));
        }
        r.note("warning: hypotheses fail; document produced because of --force");
    }
    let ternary = induce_ternary(a, &tau, &alpha, &beta)?;
    for ([i, j, k], v) in ternary.nonzero_brackets() {
        let b = m.basis();
        r.fact(
            format!("[{}, {}, {}]", b[i], b[j], b[k]),
            document::render_vector(v, b),
        );
    }
    if ternary.nonzero_brackets().next().is_none() {
        r.fact("bracket", "zero");
    }
    let mut maps = std::collections::BTreeMap::new();
    maps.insert(alpha_name.clone(), alpha);
    maps.insert(beta_name.clone(), beta);
    let mut functionals = std::collections::BTreeMap::new();
    functionals.insert(tau_name, tau);
    let out = Model {
        params: m.params.clone(),
        algebra: Algebra::Ternary(ternary),
        maps,
        functionals,
        constraints: Vec::new(),
        twist_names: Some([alpha_name, beta_name]),
        provenance: None,
    };
    Ok((r, Some(out)))
}

/// `classify`: case analysis of a compatible triple.
pub fn cmd_classify(command: &str, m: &Model, names: &TripleNames) -> Result<RunReport> {
    let mut r = RunReport::new(command);
    let [tau_name, alpha_name, beta_name] = names.resolve(m)?;
    let t = triple(m, &tau_name, &alpha_name, &beta_name)?;
    if !add_compat(&mut r, m, &t, [&tau_name, &alpha_name, &beta_name])? {
        r.note("classification needs a compatible triple");
        return Ok(r);
    }
    let c = classify_triple(&t)?;
    if !c.degenerate {
        let rep = check_kernel_stability(&t)?;
        r.add_report("kernel-stability", &rep, m.basis(), true);
    }
    r.fact("classification", c.to_string());
    let kernel: Vec<String> = c
        .kernel
        .basis()
        .iter()
        .map(|v| document::render_vector(v, m.basis()))
        .collect();
    r.fact(
        format!("ker {tau_name}"),
        if kernel.is_empty() { "{0}".to_string() } else { format!("span{{{}}}", kernel.join(", ")) },
    );
    let zero = |z: bool| if z { "zero" } else { "nonzero" };
    r.fact(format!("{tau_name}∘{alpha_name}"), zero(c.tau_alpha_zero));
    r.fact(format!("{tau_name}∘{beta_name}"), zero(c.tau_beta_zero));
    Ok(r)
}

/// Renders a matrix as rows separated by `;`.
pub fn render_matrix(m: &Matrix) -> String {
    let mut out = String::from("[");
    for r in 0..m.rows() {
        if r > 0 {
            out.push_str("; ");
        }
        let row: Vec<String> = m.row(r).iter().map(Scalar::to_string).collect();
        out.push_str(&row.join(", "));
    }
    out.push(']');
    out
}

/// `solve-beta`: the space of maps `β` satisfying the conditions linear in
/// `β`, given `α` and a trace function `τ`.
pub fn cmd_solve_beta(command: &str, m: &Model, names: &TripleNames) -> Result<RunReport> {
    let mut r = RunReport::new(command);
    let a = m.binary()?;
    let tau_name = resolve_functional(m, names.tau.as_deref())?;
    let alpha_name = names.alpha.clone().unwrap_or_else(|| default_alpha(m));
    let tau = m.functional(&tau_name)?;
    let alpha = m.map(&alpha_name)?;
    let trace = check_trace_function(a, &tau)?;
    if !r.add_report(format!("trace[{tau_name}]"), &trace, m.basis(), true) {
        return Ok(r);
    }
    let space = solve_beta_space(a, &alpha, &tau)?;
    r.fact("dimension", space.space.dim().to_string());
    r.fact(
        format!("tau-alpha[{tau_name},{alpha_name}]"),
        if space.tau_alpha_holds { "holds" } else { "fails" },
    );
    r.fact(
        format!("{alpha_name} in space"),
        if space.space.contains(&alpha.vectorize())? { "yes" } else { "no" },
    );
    for (k, b) in space.maps()?.iter().enumerate() {
        r.fact(format!("basis[{k}]"), render_matrix(b));
    }
    Ok(r)
}

/// `twist`: the document with bracket `ρ∘[·,·,·]` and twist `(ρ, ρ)`.
pub fn cmd_twist(command: &str, m: &Model, rho_name: &str) -> Result<(RunReport, Option<Model>)> {
    let mut r = RunReport::new(command);
    let t = m.ternary()?;
    if !t.has_identity_twist() {
        return Err(Error::AlreadyTwisted);
    }
    let rho = m.map(rho_name)?;
    let rep = check_ternary_endomorphism(t, &rho)?;
    if !r.add_report(format!("endo[{rho_name}]"), &rep, m.basis(), false) {
        r.note(Error::NotAnEndomorphism.to_string());
        return Ok((r, None));
    }
    let twisted = twist_by_endomorphism(t, &rho)?;
    let mut out = m.clone();
    out.algebra = Algebra::Ternary(twisted);
    out.maps.insert(rho_name.to_string(), rho);
    out.twist_names = Some([rho_name.to_string(), rho_name.to_string()]);
    out.constraints.clear();
    Ok((r, Some(out)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JacobianCommand {
    Bracket,
    FiCheck,
    TwistCheck,
}

/// The pool used by `fi-check` without arguments.
pub const DEFAULT_SAMPLE: [&str; 7] = ["x1", "x2", "x3", "x1^2", "x1*x2", "x2*x3", "x3^2"];

fn parse_polys(texts: &[String]) -> Result<Vec<TriPoly>> {
    texts.iter().map(|t| TriPoly::parse(t)).collect()
}

fn five(polys: &[TriPoly]) -> Result<[TriPoly; 5]> {
    polys.to_vec().try_into().map_err(|v: Vec<TriPoly>| Error::DimensionMismatch {
        expected: 5,
        found: v.len(),
    })
}

/// `jacobian`: the Jacobian-determinant bracket on polynomials in
/// `x1, x2, x3`.
pub fn cmd_jacobian(
    command: &str,
    sub: JacobianCommand,
    polys: &[String],
    gamma: Option<&str>,
) -> Result<RunReport> {
    let mut r = RunReport::new(command);
    let mut polys = parse_polys(polys)?;
    let labels = |p: &[TriPoly]| -> Vec<String> { p.iter().map(|f| f.to_string()).collect() };
    match sub {
        JacobianCommand::Bracket => {
            let [f, g, h]: [TriPoly; 3] = polys.try_into().map_err(|v: Vec<TriPoly>| {
                Error::DimensionMismatch { expected: 3, found: v.len() }
            })?;
            r.fact("bracket", jacobian_bracket(&f, &g, &h).to_string());
        }
        JacobianCommand::FiCheck if polys.is_empty() => {
            let pool = parse_polys(&DEFAULT_SAMPLE.map(String::from))?;
            let (rep, count) = check_fundamental_identity_exhaustive(&pool, true);
            r.add_report("fundamental-identity", &rep, &labels(&pool), true);
            r.fact("sample", labels(&pool).join(", "));
            r.fact("tuples expanded", count.to_string());
        }
        JacobianCommand::FiCheck => {
            let rep = check_fundamental_identity(&five(&polys)?);
            r.add_report("fundamental-identity", &rep, &labels(&polys), true);
        }
        JacobianCommand::TwistCheck => {
            let text = gamma.unwrap_or("x1 + x2^2, x2, x3");
            let parts: Vec<&str> = text.split(',').map(str::trim).collect();
            let parts: [&str; 3] = parts.try_into().map_err(|v: Vec<&str>| Error::DimensionMismatch {
                expected: 3,
                found: v.len(),
            })?;
            let g = PolyMap::parse(parts)?;
            if polys.is_empty() {
                polys = parse_polys(&DEFAULT_SAMPLE[..5].iter().map(|s| s.to_string()).collect::<Vec<_>>())?;
            }
            r.fact("gamma", g.to_string());
            r.fact("det J", det_jacobian(&g).to_string());
            let rep = check_twisted_hom_nambu(&g, &five(&polys)?)?;
            r.add_report("twisted-hom-nambu", &rep, &labels(&polys), true);
        }
    }
    Ok(r)
}

/// `examples`: lists the fixture library.
pub fn cmd_examples_list(command: &str) -> RunReport {
    let mut r = RunReport::new(command);
    for f in fixtures::ALL {
        r.fact(f.name, f.summary);
    }
    r
}

/// Turns a command error into a report line and the usage exit status.
pub fn error_report(command: &str, e: &Error) -> (RunReport, i32) {
    let mut r = RunReport::new(command);
    r.note(format!("error: {e}"));
    (r, EXIT_USAGE)
}
