//! End-to-end run over the worked examples in the fixture library.

use super::document::render_vector;
use super::{fixtures, prepare, CheckLine, Model, Prepare, RunReport};
use crate::algebras::{check_hom_jacobi, check_trace_function, trace_functions};
use crate::compat::{check_kernel_stability, classify_triple, compatibility_conditions, solve_beta_space, CompatTriple};
use crate::error::Result;
use crate::jacobian::{check_fundamental_identity_exhaustive, check_twisted_hom_nambu, PolyMap, TriPoly};
use crate::linalg::{Covector, Matrix, Vector};
use crate::scalars::{parse_scalar, Bindings, Scalar};
use crate::ternary::{check_hom_nambu, induce_ternary, twist_by_endomorphism, TernaryAlgebra};
use crate::Error;

fn load(name: &str) -> Result<Model> {
    Model::parse_json(fixtures::get(name).ok_or_else(|| Error::UnknownName(name.into()))?)
}

fn constrained(name: &str, r: &mut RunReport) -> Result<Model> {
    prepare(&load(name)?, &Prepare::default(), r)
}

fn vector(m: &Model, coords: &[&str]) -> Result<Vector> {
    coords.iter().map(|c| parse_scalar(c, &m.params)).collect()
}

/// Compares every bracket of `t` with `expected`; unlisted triples must
/// vanish.
fn bracket_table(
    r: &mut RunReport,
    label: &str,
    m: &Model,
    t: &TernaryAlgebra,
    expected: &[([usize; 3], &[&str])],
) -> Result<bool> {
    let n = t.dim();
    let mut mismatch = None;
    'outer: for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let want = match expected.iter().find(|(idx, _)| *idx == [i, j, k]) {
                    Some((_, c)) => vector(m, c)?,
                    None => vec![Scalar::zero(); n],
                };
                let got = t.structure_constants(i, j, k);
                if *got != want {
                    let b = m.basis();
                    mismatch = Some(format!(
                        "[{}, {}, {}] = {}, expected {}",
                        b[i],
                        b[j],
                        b[k],
                        render_vector(got, b),
                        render_vector(&want, b)
                    ));
                    break 'outer;
                }
            }
        }
    }
    let ok = mismatch.is_none();
    r.check(match mismatch {
        None => CheckLine::pass(label),
        Some(d) => CheckLine::fail(label, Some(d)),
    });
    Ok(ok)
}

fn compat_lines(r: &mut RunReport, prefix: &str, m: &Model, t: &CompatTriple) -> Result<()> {
    for rep in compatibility_conditions(t)? {
        let name = format!("{prefix}: {}", rep.condition.clone().unwrap_or_default());
        r.add_report(name, &rep, m.basis(), rep.residual.as_ref().is_some_and(|v| v.len() == 1));
    }
    Ok(())
}

fn standard_triple(m: &Model) -> Result<CompatTriple> {
    CompatTriple::new(m.map("alpha")?, m.map("beta")?, m.functional("tau")?)
}

fn example1(r: &mut RunReport) -> Result<()> {
    let m = constrained("ex1_gl2", r)?;
    let a = m.binary()?;
    let t = standard_triple(&m)?;
    r.add_report("ex1: hom-jacobi[alpha]", &check_hom_jacobi(a, &t.alpha)?, m.basis(), false);
    r.add_report("ex1: trace[tau]", &check_trace_function(a, &t.tau)?, m.basis(), true);
    compat_lines(r, "ex1", &m, &t)?;
    let c = classify_triple(&t)?;
    r.check(CheckLine::expect("ex1: classification is nondegenerate, C1", c.to_string() == "nondegenerate, C1", || c.to_string()));
    r.check(CheckLine::expect("ex1: gl(2) trace functions are multiples of tr", trace_functions(a)?.dim() == 1, || "dimension differs".into()));
    let space = solve_beta_space(a, &t.alpha, &t.tau)?;
    let spanned = space.space.dim() == 1 && space.space.contains(&t.alpha.vectorize())?;
    r.check(CheckLine::expect("ex1: beta space is spanned by alpha", spanned, || {
        format!("dimension {}", space.space.dim())
    }));
    let induced = induce_ternary(a, &t.tau, &t.alpha, &t.beta)?;
    r.add_report("ex1: induced hom-nambu", &check_hom_nambu(&induced)?, m.basis(), false);
    Ok(())
}

fn example2(r: &mut RunReport) -> Result<()> {
    let raw = load("ex2_4dim")?;
    let unconstrained = check_hom_jacobi(raw.binary()?, &raw.map("alpha")?)?;
    r.check(CheckLine::expect(
        "ex2: hom-jacobi fails without the constraints",
        !unconstrained.holds_ok() && unconstrained.witness.is_some(),
        || "unexpectedly holds".into(),
    ));
    let m = constrained("ex2_4dim", r)?;
    let a = m.binary()?;
    let t = standard_triple(&m)?;
    r.add_report("ex2: hom-jacobi[alpha]", &check_hom_jacobi(a, &t.alpha)?, m.basis(), false);
    r.add_report("ex2: trace[tau]", &check_trace_function(a, &t.tau)?, m.basis(), true);
    compat_lines(r, "ex2", &m, &t)?;
    let c = classify_triple(&t)?;
    r.check(CheckLine::expect("ex2: classification is nondegenerate, C2", c.to_string() == "nondegenerate, C2", || c.to_string()));
    r.add_report("ex2: kernel-stability", &check_kernel_stability(&t)?, m.basis(), true);
    let induced = induce_ternary(a, &t.tau, &t.alpha, &t.beta)?;
    bracket_table(r, "ex2: induced brackets, general form", &m, &induced, &[
        ([0, 1, 2], &["0", "0", "g1*a23 - g2*a13", "g1*b23 - g2*(b12 + b23)"]),
        ([0, 1, 3], &["0", "0", "g1*a24 - g2*a14", "g1*(b23 + b34) - g2*(b12 + b23 + b34)"]),
        ([0, 2, 3], &["0", "0", "g1*a34", "g1*b34"]),
        ([1, 2, 3], &["0", "0", "g2*a34", "g2*b34"]),
    ])?;
    let mut special = Bindings::new();
    for p in ["g1", "g2", "a12", "a13", "a14", "a23", "a24", "a34"] {
        special.insert(p.into(), Scalar::one());
    }
    let s = m.substitute(&special)?;
    let sa = s.binary()?;
    let st = standard_triple(&s)?;
    let special_induced = induce_ternary(sa, &st.tau, &st.alpha, &st.beta)?;
    bracket_table(r, "ex2: induced brackets at g1 = g2 = 1, a_ij = 1", &s, &special_induced, &[
        ([0, 1, 2], &["0", "0", "0", "-b12"]),
        ([0, 1, 3], &["0", "0", "0", "-b12"]),
        ([0, 2, 3], &["0", "0", "1", "b34"]),
        ([1, 2, 3], &["0", "0", "1", "b34"]),
    ])?;
    r.note("ex2: at g1 = g2 = 1, [x1, x2, x4] = g1*[x2, x4] - g2*[x1, x4] = -b12*x4, not -b34*x4");
    let space = solve_beta_space(a, &t.alpha, &t.tau)?;
    let mut in_kernel = true;
    for b in space.maps()? {
        in_kernel &= t.tau.compose(&b)?.is_zero();
    }
    r.check(CheckLine::expect(
        "ex2: beta space is {beta : tau∘beta = 0}, dimension 12",
        space.space.dim() == 12 && in_kernel,
        || format!("dimension {}", space.space.dim()),
    ));
    r.add_report("ex2: induced hom-nambu", &check_hom_nambu(&induced)?, m.basis(), false);
    Ok(())
}

fn example3_like(r: &mut RunReport, name: &str, label: &str, expected: [&str; 3]) -> Result<()> {
    let m = constrained(name, r)?;
    let a = m.binary()?;
    let t = standard_triple(&m)?;
    r.add_report(format!("{label}: trace[tau]"), &check_trace_function(a, &t.tau)?, m.basis(), true);
    compat_lines(r, label, &m, &t)?;
    let induced = induce_ternary(a, &t.tau, &t.alpha, &t.beta)?;
    bracket_table(r, &format!("{label}: induced bracket"), &m, &induced, &[([0, 1, 2], &expected)])?;
    r.add_report(format!("{label}: induced hom-nambu"), &check_hom_nambu(&induced)?, m.basis(), false);
    let hj = check_hom_jacobi(a, &t.alpha)?;
    r.fact(
        format!("{label}: hom-jacobi[alpha] (not asserted)"),
        if hj.holds_ok() { "holds" } else { "fails for generic parameters" },
    );
    Ok(())
}

fn degenerate_cases(r: &mut RunReport) -> Result<()> {
    let sl2 = load("sl2")?;
    let a = sl2.binary()?;
    let dim = trace_functions(a)?.dim();
    r.check(CheckLine::expect("sl2: only the zero trace function", dim == 0, || format!("dimension {dim}")));
    let id = Matrix::identity(3);
    let t = induce_ternary(a, &Covector::zeros(3), &id, &id)?;
    r.check(CheckLine::expect("sl2: induced algebra is abelian", t.nonzero_brackets().next().is_none(), || {
        "nonzero bracket".into()
    }));
    let gl2 = load("gl2")?;
    let g = gl2.binary()?;
    let t = induce_ternary(g, &Covector::zeros(4), &Matrix::identity(4), &Matrix::identity(4))?;
    r.check(CheckLine::expect("gl2: tau = 0 induces the zero bracket", t.nonzero_brackets().next().is_none(), || {
        "nonzero bracket".into()
    }));
    Ok(())
}

fn nambu(r: &mut RunReport) -> Result<()> {
    let m = load("n4")?;
    let t = m.ternary()?;
    r.add_report("n4: filippov identity", &check_hom_nambu(t)?, m.basis(), false);
    let twisted = twist_by_endomorphism(t, &m.map("minus")?)?;
    r.add_report("n4: twisted by -id, hom-nambu", &check_hom_nambu(&twisted)?, m.basis(), false);
    let doubled = twist_by_endomorphism(t, &m.map("double")?);
    r.check(CheckLine::expect("n4: 2·id is not an endomorphism", doubled == Err(Error::NotAnEndomorphism), || {
        format!("{doubled:?}")
    }));
    Ok(())
}

fn jacobian(r: &mut RunReport) -> Result<()> {
    let pool: Vec<TriPoly> = super::DEFAULT_SAMPLE.iter().map(|s| TriPoly::parse(s)).collect::<Result<_>>()?;
    let labels: Vec<String> = super::DEFAULT_SAMPLE.iter().map(|s| s.to_string()).collect();
    let (rep, _) = check_fundamental_identity_exhaustive(&pool, true);
    r.add_report("jacobian: fundamental identity on the sample", &rep, &labels, true);
    let shear = PolyMap::parse(["x1 + x2^2", "x2", "x3"])?;
    let five: [TriPoly; 5] = pool[..5].to_vec().try_into().expect("five polynomials");
    let rep = check_twisted_hom_nambu(&shear, &five)?;
    r.add_report("jacobian: shear-twisted hom-nambu", &rep, &labels, true);
    Ok(())
}

/// Runs every example; the report holds iff each expectation is met.
pub fn run_examples(command: &str) -> Result<RunReport> {
    let mut r = RunReport::new(command);
    example1(&mut r)?;
    example2(&mut r)?;
    example3_like(&mut r, "ex3_3dim", "ex3", ["0", "t*a3", "t*a4"])?;
    example3_like(&mut r, "ex3_3dim_p0", "ex3 (p = 0)", ["0", "t*a3", "t*a4"])?;
    example3_like(&mut r, "ex4_3dim", "ex4", ["0", "t*a4", "t*a5"])?;
    degenerate_cases(&mut r)?;
    nambu(&mut r)?;
    jacobian(&mut r)?;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_examples_pass() {
        let r = run_examples("homnambu examples --all-paper-examples").unwrap();
        assert!(r.all_hold(), "{}", r.render_text());
    }
}
