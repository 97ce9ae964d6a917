//! The Jacobian-determinant Nambu bracket on polynomials in `x1, x2, x3`.

use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::scalars::{parse_scalar, vars_from, MultiPoly, Rational, Scalar, Vars};

static VARS: LazyLock<Vars> = LazyLock::new(|| vars_from(["x1", "x2", "x3"]));

/// Polynomial in the reserved variables `x1, x2, x3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriPoly(MultiPoly);

impl TriPoly {
    pub fn zero() -> Self {
        TriPoly(MultiPoly::zero(VARS.clone()))
    }

    pub fn constant(c: Rational) -> Self {
        TriPoly(MultiPoly::constant(VARS.clone(), c))
    }

    pub fn from_int(c: i64) -> Self {
        TriPoly::constant(Rational::from_integer(c.into()))
    }

    /// The coordinate `x_{i+1}`.
    pub fn var(i: usize) -> Self {
        TriPoly(MultiPoly::var(VARS.clone(), i))
    }

    /// `c * x1^a * x2^b * x3^e`.
    pub fn monomial(c: Rational, exps: [u32; 3]) -> Self {
        TriPoly(MultiPoly::from_terms(
            VARS.clone(),
            [(exps.to_vec(), c)],
        ))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let s = parse_scalar(text, &VARS)?;
        let den = s.denominator();
        let Some(d) = den.as_constant() else {
            return Err(Error::Parse {
                offset: 0,
                message: "expected a polynomial in x1, x2, x3".into(),
            });
        };
        let num = s.numerator().with_vars(&VARS);
        Ok(TriPoly(num.scale(&d.recip())))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.total_degree()
    }

    pub fn as_poly(&self) -> &MultiPoly {
        &self.0
    }

    pub fn derivative(&self, i: usize) -> TriPoly {
        TriPoly(self.0.derivative(i))
    }

    pub fn to_scalar(&self) -> Scalar {
        Scalar::from_poly(self.0.clone())
    }
}

impl FromStr for TriPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TriPoly::parse(s)
    }
}

impl fmt::Display for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl std::ops::$tr for &TriPoly {
            type Output = TriPoly;
            fn $m(self, rhs: &TriPoly) -> TriPoly {
                TriPoly(std::ops::$tr::$m(&self.0, &rhs.0))
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl std::ops::Neg for &TriPoly {
    type Output = TriPoly;
    fn neg(self) -> TriPoly {
        TriPoly(-&self.0)
    }
}

/// Polynomial map `γ = (γ₁, γ₂, γ₃)` of 3-space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMap {
    pub components: [TriPoly; 3],
}

impl PolyMap {
    pub fn new(components: [TriPoly; 3]) -> Self {
        PolyMap { components }
    }

    pub fn identity() -> Self {
        PolyMap::new([TriPoly::var(0), TriPoly::var(1), TriPoly::var(2)])
    }

    pub fn parse(texts: [&str; 3]) -> Result<Self> {
        let [a, b, c] = texts;
        Ok(PolyMap::new([a.parse()?, b.parse()?, c.parse()?]))
    }

    /// `ρ_γ(f) = f∘γ`.
    pub fn pullback(&self, f: &TriPoly) -> TriPoly {
        compose(f, self)
    }
}

impl fmt::Display for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.components;
        write!(f, "({a}, {b}, {c})")
    }
}

/// `det ∂(f1, f2, f3)/∂(x1, x2, x3)` by cofactor expansion along the first row.
pub fn jacobian_bracket(f1: &TriPoly, f2: &TriPoly, f3: &TriPoly) -> TriPoly {
    let d = |f: &TriPoly| [f.derivative(0), f.derivative(1), f.derivative(2)];
    let (a, b, c) = (d(f1), d(f2), d(f3));
    let minor = |i: usize, j: usize| &(&b[i] * &c[j]) - &(&b[j] * &c[i]);
    let t0 = &a[0] * &minor(1, 2);
    let t1 = &a[1] * &minor(0, 2);
    let t2 = &a[2] * &minor(0, 1);
    &(&t0 - &t1) + &t2
}

pub fn det_jacobian(g: &PolyMap) -> TriPoly {
    let [a, b, c] = &g.components;
    jacobian_bracket(a, b, c)
}

/// `f∘g`.
pub fn compose(f: &TriPoly, g: &PolyMap) -> TriPoly {
    let images: Vec<Option<MultiPoly>> = g.components.iter().map(|c| Some(c.0.clone())).collect();
    TriPoly(f.0.compose(&images, &VARS))
}

/// Residual of
/// `[a₁x₁, a₂x₂, [x₃,x₄,x₅]] - [[x₁,x₂,x₃], a₁x₄, a₂x₅]
///   - [a₁x₃, [x₁,x₂,x₄], a₂x₅] - [a₁x₃, a₂x₄, [x₁,x₂,x₅]]`.
fn nambu_residual<B, T>(bracket: B, twist: T, x: [&TriPoly; 5]) -> TriPoly
where
    B: Fn(&TriPoly, &TriPoly, &TriPoly) -> TriPoly,
    T: Fn(&TriPoly) -> TriPoly,
{
    let [x1, x2, x3, x4, x5] = x;
    let (t1, t2, t3, t4) = (twist(x1), twist(x2), twist(x3), twist(x4));
    let t5 = twist(x5);
    let lhs = bracket(&t1, &t2, &bracket(x3, x4, x5));
    let r1 = bracket(&bracket(x1, x2, x3), &t4, &t5);
    let r2 = bracket(&t3, &bracket(x1, x2, x4), &t5);
    let r3 = bracket(&t3, &t4, &bracket(x1, x2, x5));
    &(&(&lhs - &r1) - &r2) - &r3
}

fn report(check: &str, residual: TriPoly) -> CheckReport {
    if residual.is_zero() {
        CheckReport::holds(check)
    } else {
        CheckReport::fails(check, (0..5).collect(), vec![residual.to_scalar()])
    }
}

/// The untwisted fundamental identity on one 5-tuple.
pub fn check_fundamental_identity(sample: &[TriPoly; 5]) -> CheckReport {
    check_fundamental_identity_with(sample, jacobian_bracket)
}

/// Same as [`check_fundamental_identity`] with a caller-supplied bracket.
pub fn check_fundamental_identity_with<B>(sample: &[TriPoly; 5], bracket: B) -> CheckReport
where
    B: Fn(&TriPoly, &TriPoly, &TriPoly) -> TriPoly,
{
    let x = [&sample[0], &sample[1], &sample[2], &sample[3], &sample[4]];
    report("fundamental-identity", nambu_residual(bracket, |f| f.clone(), x))
}

/// Runs the fundamental identity on every 5-tuple drawn from `pool`.
///
/// With `dedup`, only tuples with `x₁ < x₂` and `x₃ < x₄ < x₅` (by pool
/// position) are expanded: the residual is alternating in `(x₁, x₂)` and
/// in `(x₃, x₄, x₅)` because the bracket is a determinant. Returns the
/// report, whose witness indexes into `pool`, and the number of tuples
/// expanded.
pub fn check_fundamental_identity_exhaustive(pool: &[TriPoly], dedup: bool) -> (CheckReport, usize) {
    let n = pool.len();
    let mut inner = vec![None; n * n * n];
    let mut inner_at = |i: usize, j: usize, k: usize| -> TriPoly {
        inner[(i * n + j) * n + k]
            .get_or_insert_with(|| jacobian_bracket(&pool[i], &pool[j], &pool[k]))
            .clone()
    };
    let mut count = 0;
    for idx in 0..n.pow(5) {
        let mut t = [0usize; 5];
        let mut x = idx;
        for slot in t.iter_mut().rev() {
            *slot = x % n;
            x /= n;
        }
        if dedup && !(t[0] < t[1] && t[2] < t[3] && t[3] < t[4]) {
            continue;
        }
        count += 1;
        let [a, b, c, d, e] = t;
        let p = |i: usize| &pool[i];
        let lhs = jacobian_bracket(p(a), p(b), &inner_at(c, d, e));
        let r1 = jacobian_bracket(&inner_at(a, b, c), p(d), p(e));
        let r2 = jacobian_bracket(p(c), &inner_at(a, b, d), p(e));
        let r3 = jacobian_bracket(p(c), p(d), &inner_at(a, b, e));
        let res = &(&(&lhs - &r1) - &r2) - &r3;
        if !res.is_zero() {
            return (
                CheckReport::fails("fundamental-identity", t.to_vec(), vec![res.to_scalar()]),
                count,
            );
        }
    }
    (CheckReport::holds("fundamental-identity"), count)
}

/// The identity for bracket `ρ_γ∘[·,·,·]` with twists `(ρ_γ, ρ_γ)`.
pub fn check_twisted_hom_nambu(g: &PolyMap, sample: &[TriPoly; 5]) -> Result<CheckReport> {
    let det = det_jacobian(g);
    if det != TriPoly::from_int(1) {
        return Err(Error::NotUnimodular(det.to_string()));
    }
    let bracket = |a: &TriPoly, b: &TriPoly, c: &TriPoly| g.pullback(&jacobian_bracket(a, b, c));
    let x = [&sample[0], &sample[1], &sample[2], &sample[3], &sample[4]];
    Ok(report("twisted-hom-nambu", nambu_residual(bracket, |f| g.pullback(f), x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> TriPoly {
        s.parse().unwrap()
    }

    fn shear() -> PolyMap {
        PolyMap::parse(["x1 + x2^2", "x2", "x3"]).unwrap()
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(jacobian_bracket(&p("x1"), &p("x2"), &p("x3")), p("1"));
        assert_eq!(jacobian_bracket(&p("x1^2"), &p("x2"), &p("x3")), p("2*x1"));
        // Oracle: rows (x2, x1, 0), (0, x3, x2), (x3, 0, x1):
        // x2*(x3*x1 - 0) - x1*(0 - x2*x3) + 0 = 2*x1*x2*x3.
        assert_eq!(
            jacobian_bracket(&p("x1*x2"), &p("x2*x3"), &p("x3*x1")),
            p("2*x1*x2*x3")
        );
    }

    #[test]
    fn determinants_and_composition() {
        assert_eq!(det_jacobian(&PolyMap::identity()), p("1"));
        assert_eq!(det_jacobian(&shear()), p("1"));
        let scale = PolyMap::parse(["2*x1", "x2", "x3"]).unwrap();
        assert_eq!(det_jacobian(&scale), p("2"));
        assert_eq!(compose(&p("x1"), &shear()), p("x1 + x2^2"));
        assert_eq!(compose(&p("7/2"), &shear()), p("7/2"));
        assert_eq!(compose(&p("x1*x3"), &shear()), p("x1*x3 + x2^2*x3"));
    }

    #[test]
    fn fundamental_identity_examples() {
        let coords = [p("x1"), p("x2"), p("x3"), p("x1"), p("x2")];
        assert!(check_fundamental_identity(&coords).holds_ok());
        let sample = [p("x1^2"), p("x2"), p("x3"), p("x1*x2"), p("x3^2")];
        assert!(check_fundamental_identity(&sample).holds_ok());

        // Fault injection: flip the sign of the (3,1) minor term.
        let faulty = |f1: &TriPoly, f2: &TriPoly, f3: &TriPoly| {
            let d = |f: &TriPoly| [f.derivative(0), f.derivative(1), f.derivative(2)];
            let (a, b, c) = (d(f1), d(f2), d(f3));
            let minor = |i: usize, j: usize| &(&b[i] * &c[j]) - &(&b[j] * &c[i]);
            let t0 = &a[0] * &minor(1, 2);
            let t1 = &a[1] * &minor(0, 2);
            let t2 = &a[2] * &minor(0, 1);
            &(&t0 - &t1) - &t2
        };
        let r = check_fundamental_identity_with(&sample, faulty);
        assert!(!r.holds_ok());
        assert!(!r.residual.unwrap()[0].is_zero());
    }

    #[test]
    fn twisted_identity() {
        let sample = [p("x1^2"), p("x2"), p("x3"), p("x1*x2"), p("x3^2")];
        assert!(check_twisted_hom_nambu(&PolyMap::identity(), &sample).unwrap().holds_ok());
        assert!(check_twisted_hom_nambu(&shear(), &sample).unwrap().holds_ok());
        let scale = PolyMap::parse(["2*x1", "x2", "x3"]).unwrap();
        assert_eq!(
            check_twisted_hom_nambu(&scale, &sample),
            Err(Error::NotUnimodular("2".into()))
        );
    }

    #[test]
    fn exhaustive_small_pool() {
        let pool = [p("x1"), p("x2^2"), p("x1*x3"), p("x3")];
        let (r, n) = check_fundamental_identity_exhaustive(&pool, true);
        assert!(r.holds_ok());
        assert_eq!(n, 6 * 4);
        let (r, n) = check_fundamental_identity_exhaustive(&pool[..3], false);
        assert!(r.holds_ok());
        assert_eq!(n, 243);
    }

    #[test]
    fn parse_rejects_rational_functions() {
        assert!(TriPoly::parse("1/x1").is_err());
        assert!(TriPoly::parse("y").is_err());
        assert_eq!(p("x2*x1 + 1/2").to_string(), "x1*x2 + 1/2");
    }

    fn arb_poly() -> impl Strategy<Value = TriPoly> {
        prop::collection::vec((-3i64..4, 0u32..3, 0u32..3, 0u32..3), 0..4).prop_map(|terms| {
            terms
                .into_iter()
                .filter(|&(_, a, b, c)| a + b + c <= 2)
                .fold(TriPoly::zero(), |acc, (k, a, b, c)| {
                    &acc + &TriPoly::monomial(Rational::from_integer(k.into()), [a, b, c])
                })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn derivation_in_first_slot(f in arb_poly(), g in arb_poly(), h in arb_poly(), k in arb_poly()) {
            let lhs = jacobian_bracket(&(&f * &g), &h, &k);
            let rhs = &(&f * &jacobian_bracket(&g, &h, &k)) + &(&g * &jacobian_bracket(&f, &h, &k));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn alternating(f in arb_poly(), g in arb_poly()) {
            prop_assert!(jacobian_bracket(&f, &f, &g).is_zero());
            prop_assert!(jacobian_bracket(&f, &g, &g).is_zero());
            prop_assert!(jacobian_bracket(&g, &f, &g).is_zero());
        }

        #[test]
        fn chain_rule(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            let s = shear();
            let lhs = jacobian_bracket(&s.pullback(&f), &s.pullback(&g), &s.pullback(&h));
            let rhs = &s.pullback(&jacobian_bracket(&f, &g, &h)) * &det_jacobian(&s);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn display_round_trip(f in arb_poly()) {
            prop_assert_eq!(TriPoly::parse(&f.to_string()).unwrap(), f);
        }
    }
}
