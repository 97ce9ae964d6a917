//! Compatibility of a triple `(α, β, τ)`, kernel cases, and the space of
//! admissible `β` for a given `α` and `τ`.

use std::fmt;

use crate::algebras::{check_hom_jacobi, check_trace_function, BinaryAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{
    kernel, solve_linear, vec_scale, vec_sub, zero_vector, Covector,
    LinearSolution, Matrix, Subspace, Vector,
};
use crate::report::{all_pairs, denominator_assumptions, strict_pairs, strict_triples, CheckReport};
use crate::scalars::Scalar;
use crate::ternary::induce_ternary;

pub const TAU_ALPHA: &str = "tau-alpha";
pub const TAU_BETA: &str = "tau-beta";
pub const ALPHA_BETA: &str = "alpha-beta";

#[derive(Clone, Debug, PartialEq)]
pub struct CompatTriple {
    pub alpha: Matrix,
    pub beta: Matrix,
    pub tau: Covector,
}

impl CompatTriple {
    pub fn new(alpha: Matrix, beta: Matrix, tau: Covector) -> Result<Self> {
        let n = tau.dim();
        for m in [&alpha, &beta] {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: if m.rows() != n { m.rows() } else { m.cols() },
                });
            }
        }
        Ok(CompatTriple { alpha, beta, tau })
    }

    pub fn dim(&self) -> usize {
        self.tau.dim()
    }

    fn assumptions(&self) -> Vec<Scalar> {
        denominator_assumptions(
            self.alpha
                .entries()
                .iter()
                .chain(self.beta.entries())
                .chain(self.tau.entries()),
        )
    }
}

/// `τ(m(x))τ(y) = τ(x)τ(m(y))` on basis pairs.
fn scalar_condition(name: &str, m: &Matrix, tau: &Covector) -> Result<CheckReport> {
    let tm = tau.compose(m)?;
    let (t, s) = (tau.entries(), tm.entries());
    CheckReport::scan(name, all_pairs(tau.dim()), |p| {
        let (i, j) = (p[0], p[1]);
        Ok(vec![s[i].mul(&t[j]).sub(&t[i].mul(&s[j]))])
    })
}

/// `τ(α(x))β(y) = τ(β(x))α(y)` on basis pairs.
fn mixed_condition(t: &CompatTriple) -> Result<CheckReport> {
    let ta = t.tau.compose(&t.alpha)?;
    let tb = t.tau.compose(&t.beta)?;
    CheckReport::scan(ALPHA_BETA, all_pairs(t.dim()), |p| {
        let (i, j) = (p[0], p[1]);
        Ok(vec_sub(
            &vec_scale(&ta.entries()[i], &t.beta.column(j)),
            &vec_scale(&tb.entries()[i], &t.alpha.column(j)),
        ))
    })
}

/// The three compatibility conditions, each as its own report, in the order
/// tau-alpha, tau-beta, alpha-beta.
pub fn compatibility_conditions(t: &CompatTriple) -> Result<[CheckReport; 3]> {
    let a = t.assumptions();
    Ok([
        scalar_condition(TAU_ALPHA, &t.alpha, &t.tau)?,
        scalar_condition(TAU_BETA, &t.beta, &t.tau)?,
        mixed_condition(t)?,
    ]
    .map(|r| r.with_assumptions(a.clone())))
}

/// Holds iff all three conditions hold; otherwise reports the first failing
/// condition and its witness pair.
pub fn check_compatibility(t: &CompatTriple) -> Result<CheckReport> {
    let reports = compatibility_conditions(t)?;
    let assumptions = t.assumptions();
    for r in reports {
        if !r.holds_ok() {
            let name = r.check.clone();
            let mut out = r.with_condition(&name);
            out.check = "compatibility".into();
            return Ok(out);
        }
    }
    Ok(CheckReport::holds("compatibility").with_assumptions(assumptions))
}

fn require_compatible(t: &CompatTriple) -> Result<()> {
    let r = check_compatibility(t)?;
    if r.holds_ok() {
        Ok(())
    } else {
        Err(Error::IncompatibleTriple(r.condition.unwrap_or_default()))
    }
}

/// Position of the images of `α` and `β` relative to `ker τ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    /// Neither image lies in `ker τ`.
    C1,
    /// Both images lie in `ker τ`.
    C2,
    /// Only `β` maps into `ker τ`.
    C3,
    /// Only `α` maps into `ker τ`.
    C4,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TripleClassification {
    /// `ker τ` is `{0}` or the whole space.
    pub degenerate: bool,
    pub case: Option<Case>,
    pub tau_alpha_zero: bool,
    pub tau_beta_zero: bool,
    pub kernel: Subspace,
}

impl fmt::Display for TripleClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.case {
            Some(c) => write!(f, "nondegenerate, {c}"),
            None if self.kernel.is_zero() => f.write_str("degenerate: ker τ = {0}"),
            None => f.write_str("degenerate: ker τ = V"),
        }
    }
}

pub fn classify_triple(t: &CompatTriple) -> Result<TripleClassification> {
    require_compatible(t)?;
    let k = kernel(&t.tau)?;
    let degenerate = k.is_zero() || k.is_full();
    let tau_alpha_zero = t.tau.compose(&t.alpha)?.is_zero();
    let tau_beta_zero = t.tau.compose(&t.beta)?.is_zero();
    let case = (!degenerate).then_some(match (tau_alpha_zero, tau_beta_zero) {
        (false, false) => Case::C1,
        (true, true) => Case::C2,
        (false, true) => Case::C3,
        (true, false) => Case::C4,
    });
    Ok(TripleClassification {
        degenerate,
        case,
        tau_alpha_zero,
        tau_beta_zero,
        kernel: k,
    })
}

/// Solution of the conditions that are linear in `β`.
#[derive(Clone, Debug, PartialEq)]
pub struct BetaSpace {
    /// Vectorized `β` (row-major), inside a `dim²`-dimensional space.
    pub space: Subspace,
    /// Whether `α` itself satisfies the tau-alpha condition.
    pub tau_alpha_holds: bool,
}

impl BetaSpace {
    /// Basis elements as matrices.
    pub fn maps(&self) -> Result<Vec<Matrix>> {
        let n = (self.space.ambient_dim() as f64).sqrt() as usize;
        self.space
            .basis()
            .iter()
            .map(|v| unvectorize(n, v))
            .collect()
    }
}

pub fn unvectorize(n: usize, v: &[Scalar]) -> Result<Matrix> {
    Matrix::from_vectorized(n, n, v.to_vec())
}

/// Solves tau-beta and alpha-beta for `β`.
pub fn solve_beta_space(a: &BinaryAlgebra, alpha: &Matrix, tau: &Covector) -> Result<BetaSpace> {
    let n = a.dim();
    if !check_trace_function(a, tau)?.holds_ok() {
        return Err(Error::HypothesisFailure("τ is not a trace function".into()));
    }
    if alpha.rows() != n || alpha.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: alpha.rows(),
        });
    }
    let t = tau.entries();
    let ta = tau.compose(alpha)?;
    let var = |r: usize, c: usize| r * n + c;
    let mut rows: Vec<(Vector, Scalar)> = Vec::new();
    for p in strict_pairs(n) {
        let (i, j) = (p[0], p[1]);
        // Σ_r τ_r β[r][i] τ_j - τ_i Σ_r τ_r β[r][j]
        let mut row = zero_vector(n * n);
        for r in 0..n {
            row[var(r, i)] += &t[r].mul(&t[j]);
            row[var(r, j)] -= &t[i].mul(&t[r]);
        }
        rows.push((row, Scalar::zero()));
    }
    for p in all_pairs(n) {
        let (i, j) = (p[0], p[1]);
        for k in 0..n {
            // τ(αe_i) β[k][j] - Σ_r τ_r β[r][i] α[k][j]
            let mut row = zero_vector(n * n);
            row[var(k, j)] += &ta.entries()[i];
            let akj = alpha.get(k, j);
            if !akj.is_zero() {
                for r in 0..n {
                    row[var(r, i)] -= &t[r].mul(akj);
                }
            }
            rows.push((row, Scalar::zero()));
        }
    }
    rows.retain(|(r, _)| !r.iter().all(Scalar::is_zero));
    let LinearSolution::Homogeneous(mut space) = solve_linear(&rows, n * n)? else {
        unreachable!("homogeneous system")
    };
    let extra = denominator_assumptions(alpha.entries().iter().chain(tau.entries()));
    for e in extra {
        crate::linalg::push_assumption(&mut space.assumptions, &e);
    }
    Ok(BetaSpace {
        space,
        tau_alpha_holds: scalar_condition(TAU_ALPHA, alpha, tau)?.holds_ok(),
    })
}

/// When `ker τ` is `{0}` or everything, the induced ternary bracket vanishes,
/// and for `ker τ = {0}` so does the binary bracket.
pub fn check_abelian_degenerate(a: &BinaryAlgebra, tau: &Covector) -> Result<CheckReport> {
    let n = a.dim();
    let k = kernel(tau)?;
    if !(k.is_zero() || k.is_full()) {
        return Err(Error::NotDegenerate);
    }
    let id = Matrix::identity(n);
    let t = induce_ternary(a, tau, &id, &id)?;
    let report = CheckReport::scan("abelian", strict_triples(n), |w| {
        Ok(t.structure_constants(w[0], w[1], w[2]).clone())
    })?;
    if !report.holds_ok() || !k.is_zero() {
        return Ok(report);
    }
    CheckReport::scan("abelian", strict_pairs(n), |p| {
        Ok(a.structure_constants(p[0], p[1]).clone())
    })
}

/// Checks `α(K) ⊆ K` and `β(K) ⊆ K` for `K = ker τ`. A failing witness is
/// the index of a kernel basis vector; the residual is `τ` of its image.
pub fn check_kernel_stability(t: &CompatTriple) -> Result<CheckReport> {
    require_compatible(t)?;
    let k = kernel(&t.tau)?;
    if k.is_zero() || k.is_full() {
        return Err(Error::DegenerateTriple);
    }
    for (m, name) in [(&t.alpha, "alpha"), (&t.beta, "beta")] {
        let r = CheckReport::scan("kernel-stability", (0..k.dim()).map(|i| vec![i]), |w| {
            Ok(vec![t.tau.apply(&m.apply(&k.basis()[w[0]])?)?])
        })?;
        if !r.holds_ok() {
            return Ok(r.with_condition(name));
        }
    }
    Ok(CheckReport::holds("kernel-stability").with_assumptions(k.assumptions.clone()))
}

/// Runs the Hom-Jacobi check for `β` once its hypotheses are confirmed:
/// `(A, α)` is Hom-Lie, alpha-beta holds and `τ∘α` is nonzero.
pub fn check_beta_hom_jacobi(a: &BinaryAlgebra, t: &CompatTriple) -> Result<CheckReport> {
    if !check_hom_jacobi(a, &t.alpha)?.holds_ok() {
        return Err(Error::HypothesisFailure("α does not satisfy Hom-Jacobi".into()));
    }
    if !mixed_condition(t)?.holds_ok() {
        return Err(Error::HypothesisFailure(format!("{ALPHA_BETA} fails")));
    }
    if t.tau.compose(&t.alpha)?.is_zero() {
        return Err(Error::HypothesisFailure("τ(α(v)) = 0 for every v".into()));
    }
    let mut r = check_hom_jacobi(a, &t.beta)?;
    r.check = "beta-hom-jacobi".into();
    Ok(r)
}

/// The nonzero `λ` with `v = λ·w`, if there is one.
pub fn proportional(v: &[Scalar], w: &[Scalar]) -> Option<Scalar> {
    let idx = w.iter().position(|x| !x.is_zero())?;
    let lambda = v[idx].div(&w[idx]).ok()?;
    if lambda.is_zero() {
        return None;
    }
    v.iter()
        .zip(w)
        .all(|(a, b)| *a == lambda.mul(b))
        .then_some(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::basis_vector;
    use crate::scalars::{parse_scalar, vars_from};

    fn ints(v: &[i64]) -> Vector {
        v.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    /// Conjugation x -> s⁻¹ x s on gl(2) with s = diag(1, 2).
    fn conj() -> Matrix {
        let mut m = Matrix::identity(4);
        m.set(1, 1, Scalar::from_int(2));
        m.set(2, 2, Scalar::ratio(1, 2));
        m
    }

    fn tr() -> Covector {
        Covector::new(ints(&[1, 0, 0, 1]))
    }

    #[test]
    fn gl2_conjugation_triple() {
        let lambda = Scalar::ratio(3, 5);
        let t = CompatTriple::new(conj(), conj().scale(&lambda), tr()).unwrap();
        assert!(check_compatibility(&t).unwrap().holds_ok());
        let c = classify_triple(&t).unwrap();
        assert_eq!(c.case, Some(Case::C1));
        assert_eq!(c.to_string(), "nondegenerate, C1");
        assert!(check_kernel_stability(&t).unwrap().holds_ok());
        let a = BinaryAlgebra::general_linear(2).compose_with(&conj()).unwrap();
        assert!(check_beta_hom_jacobi(&a, &t).unwrap().holds_ok());
    }

    #[test]
    fn swapped_beta_breaks_mixed_condition() {
        let id = Matrix::identity(2);
        let swap = Matrix::from_columns(&[basis_vector(2, 1), basis_vector(2, 0)]).unwrap();
        let tau = Covector::new(ints(&[1, 0]));
        assert!(check_compatibility(&CompatTriple::new(id.clone(), id.clone(), tau.clone()).unwrap())
            .unwrap()
            .holds_ok());
        let t = CompatTriple::new(id, swap, tau).unwrap();
        let [ta, tb, ab] = compatibility_conditions(&t).unwrap();
        assert!(ta.holds_ok());
        // τ∘β = (0, 1) is not proportional to τ, so tau-beta fails as well.
        assert!(!tb.holds_ok());
        assert!(!ab.holds_ok());
        let w = ab.witness.clone().unwrap();
        // Oracle: τ(α(x_i)) β(x_j) - τ(β(x_i)) α(x_j) by hand.
        let (i, j) = (w[0], w[1]);
        let tau_alpha_i = Scalar::from_int(if i == 0 { 1 } else { 0 });
        let tau_beta_i = Scalar::from_int(if i == 1 { 1 } else { 0 });
        let expected = vec_sub(
            &vec_scale(&tau_alpha_i, &basis_vector(2, 1 - j)),
            &vec_scale(&tau_beta_i, &basis_vector(2, j)),
        );
        assert_eq!(ab.residual.unwrap(), expected);
        let r = check_compatibility(&t).unwrap();
        assert_eq!(r.condition.as_deref(), Some(TAU_BETA));
        assert!(matches!(classify_triple(&t), Err(Error::IncompatibleTriple(_))));
    }

    #[test]
    fn c2_triple() {
        // α(x_i) = x3, β(x_i) = x4, τ = (γ1, γ2, 0, 0) with γ1 = 1.
        let v = vars_from(["g2"]);
        let all_to = |k: usize| Matrix::from_columns(&vec![basis_vector(4, k); 4]).unwrap();
        let tau = Covector::new(vec![
            Scalar::one(),
            parse_scalar("g2", &v).unwrap(),
            Scalar::zero(),
            Scalar::zero(),
        ]);
        let t = CompatTriple::new(all_to(2), all_to(3), tau).unwrap();
        let c = classify_triple(&t).unwrap();
        assert_eq!(c.to_string(), "nondegenerate, C2");
        assert!(check_kernel_stability(&t).unwrap().holds_ok());
        let a = BinaryAlgebra::with_dim(4);
        assert!(matches!(
            check_beta_hom_jacobi(&a, &t),
            Err(Error::HypothesisFailure(_))
        ));
    }

    #[test]
    fn zero_tau_is_degenerate() {
        let id = Matrix::identity(3);
        let t = CompatTriple::new(id.clone(), id, Covector::zeros(3)).unwrap();
        let c = classify_triple(&t).unwrap();
        assert!(c.degenerate);
        assert_eq!(c.case, None);
        assert_eq!(c.to_string(), "degenerate: ker τ = V");
        assert_eq!(check_kernel_stability(&t), Err(Error::DegenerateTriple));
    }

    #[test]
    fn beta_equal_alpha_makes_scalar_conditions_agree() {
        let tau = Covector::new(ints(&[1, 2, 0]));
        for alpha in [Matrix::identity(3), Matrix::zeros(3, 3), {
            let mut m = Matrix::identity(3);
            m.set(0, 1, Scalar::one());
            m
        }] {
            let t = CompatTriple::new(alpha.clone(), alpha, tau.clone()).unwrap();
            let [a, b, _] = compatibility_conditions(&t).unwrap();
            assert_eq!(a.verdict, b.verdict);
            assert_eq!(a.witness, b.witness);
        }
    }

    #[test]
    fn beta_space_gl2() {
        let a = BinaryAlgebra::general_linear(2).compose_with(&conj()).unwrap();
        let s = solve_beta_space(&a, &conj(), &tr()).unwrap();
        assert!(s.tau_alpha_holds);
        assert_eq!(s.space.dim(), 1);
        assert!(s.space.contains(&conj().vectorize()).unwrap());
        for beta in s.maps().unwrap() {
            let t = CompatTriple::new(conj(), beta, tr()).unwrap();
            assert!(check_compatibility(&t).unwrap().holds_ok());
        }
    }

    #[test]
    fn beta_space_zero_tau_is_everything() {
        let a = BinaryAlgebra::with_dim(3);
        let s = solve_beta_space(&a, &Matrix::identity(3), &Covector::zeros(3)).unwrap();
        assert_eq!(s.space.dim(), 9);
    }

    #[test]
    fn beta_space_requires_trace_function() {
        let a = BinaryAlgebra::general_linear(2);
        let bad = Covector::new(ints(&[1, 0, 0, 0]));
        assert!(matches!(
            solve_beta_space(&a, &Matrix::identity(4), &bad),
            Err(Error::HypothesisFailure(_))
        ));
    }

    #[test]
    fn beta_space_when_alpha_maps_into_kernel() {
        // α(x_i) = x3, τ = (1, 1, 0, 0): the conditions reduce to τ∘β = 0,
        // i.e. every column of β lies in the 3-dimensional ker τ.
        let alpha = Matrix::from_columns(&vec![basis_vector(4, 2); 4]).unwrap();
        let tau = Covector::new(ints(&[1, 1, 0, 0]));
        let s = solve_beta_space(&BinaryAlgebra::with_dim(4), &alpha, &tau).unwrap();
        assert_eq!(s.space.dim(), 12);
        for beta in s.maps().unwrap() {
            assert!(tau.compose(&beta).unwrap().is_zero());
        }
    }

    #[test]
    fn abelian_degenerate() {
        let mut sl2 = BinaryAlgebra::abelian(vec!["e".into(), "f".into(), "h".into()]);
        sl2.set_bracket(0, 1, ints(&[0, 0, 1])).unwrap();
        sl2.set_bracket(0, 2, ints(&[-2, 0, 0])).unwrap();
        sl2.set_bracket(1, 2, ints(&[0, 2, 0])).unwrap();
        assert!(check_abelian_degenerate(&sl2, &Covector::zeros(3)).unwrap().holds_ok());
        assert_eq!(
            check_abelian_degenerate(&BinaryAlgebra::with_dim(2), &Covector::new(ints(&[1, 1]))),
            Err(Error::NotDegenerate)
        );
        let one = BinaryAlgebra::with_dim(1);
        assert!(check_abelian_degenerate(&one, &Covector::new(ints(&[1]))).unwrap().holds_ok());
    }

    #[test]
    fn classification_ignores_tau_scaling() {
        let lambda = Scalar::from_int(2);
        let t = CompatTriple::new(conj(), conj().scale(&lambda), tr()).unwrap();
        let t2 = CompatTriple::new(t.alpha.clone(), t.beta.clone(), tr().scale(&Scalar::ratio(-7, 3)))
            .unwrap();
        let (c, c2) = (classify_triple(&t).unwrap(), classify_triple(&t2).unwrap());
        assert_eq!(
            (c.degenerate, c.case, c.tau_alpha_zero, c.tau_beta_zero),
            (c2.degenerate, c2.case, c2.tau_alpha_zero, c2.tau_beta_zero)
        );
    }

    #[test]
    fn proportionality() {
        let v = ints(&[2, 0, 4]);
        assert_eq!(proportional(&v, &ints(&[1, 0, 2])), Some(Scalar::from_int(2)));
        assert_eq!(proportional(&v, &ints(&[1, 1, 2])), None);
        assert_eq!(proportional(&ints(&[0, 0, 0]), &ints(&[1, 0, 2])), None);
    }
}
