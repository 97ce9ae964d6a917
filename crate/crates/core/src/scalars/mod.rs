//! Exact scalars: rationals, multivariate polynomials and rational
//! functions in declared parameters.

mod parse;
mod poly;
mod scalar;

pub use parse::parse_scalar;
pub(crate) use parse::identifiers;
pub use poly::{vars_from, Monomial, MultiPoly, Rational, Vars};
pub use scalar::Scalar;

use std::collections::BTreeMap;

/// Parameter bindings for [`Scalar::substitute`].
pub type Bindings = BTreeMap<String, Scalar>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use proptest::prelude::*;

    fn params() -> Vars {
        vars_from(["a1", "p", "q", "r", "t", "b12", "b13", "b23"])
    }

    fn s(text: &str) -> Scalar {
        parse_scalar(text, &params()).unwrap()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(s("1/2").add(&s("1/3")), s("5/6"));
        assert_eq!(s("1/2 + 1/3").to_string(), "5/6");
    }

    #[test]
    fn division_then_multiplication_cancels() {
        let x = s("q*r/p").mul(&s("p"));
        assert_eq!(x, s("q*r"));
        assert_eq!(x.to_string(), "q*r");
    }

    #[test]
    fn additive_inverse_is_zero() {
        let x = s("a1*t");
        assert!(x.sub(&x).is_zero());
    }

    #[test]
    fn is_zero_cases() {
        assert!(s("(p*q - q*p)/p").is_zero());
        assert!(!s("t").is_zero());
        assert!(!s("b13 - b12 - b23").is_zero());
    }

    #[test]
    fn parse_examples() {
        assert_eq!(s("3/4").as_rational().unwrap(), &Rational::new(3.into(), 4.into()));
        assert_eq!(s("a1*t - 2").to_string(), "a1*t - 2");
        let x = s("q*r/p");
        assert_eq!(x.numerator(), s("q*r").numerator());
        assert_eq!(x.denominator(), s("p").numerator());
        assert_eq!(x.to_string(), "(q*r)/p");
    }

    #[test]
    fn parse_errors() {
        match parse_scalar("a1 + zeta", &params()) {
            Err(Error::UndeclaredParameter(n)) => assert_eq!(n, "zeta"),
            other => panic!("unexpected {other:?}"),
        }
        match parse_scalar("a1 + * 2", &params()) {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_scalar("(a1", &params()), Err(Error::Parse { .. })));
        assert!(matches!(parse_scalar("a1^-1", &params()), Err(Error::Parse { .. })));
        assert!(matches!(parse_scalar("1/0", &params()), Err(Error::Parse { .. })));
        assert!(matches!(s("p").div(&Scalar::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn precedence() {
        assert_eq!(s("-q^2"), s("0 - q*q"));
        assert_eq!(s("1 + 2*3^2"), Scalar::from_int(19));
        assert_eq!(s("2^3^2"), Scalar::from_int(64));
        assert_eq!(s("1/2*q"), s("q/2"));
    }

    #[test]
    fn substitution() {
        let v = vars_from(["g1", "g2", "a13", "a23"]);
        let e = parse_scalar("g1*a23 - g2*a13", &v).unwrap();
        let one = Bindings::from_iter(
            ["g1", "g2", "a13", "a23"].map(|n| (n.to_string(), Scalar::one())),
        );
        assert!(e.substitute(&one).unwrap().is_zero());

        let mut p0 = Bindings::new();
        p0.insert("p".into(), Scalar::zero());
        assert!(matches!(s("q*r/p").substitute(&p0), Err(Error::DenominatorVanishes)));

        let mut t5 = Bindings::new();
        t5.insert("t".into(), Scalar::from_int(5));
        assert_eq!(s("t").substitute(&t5).unwrap(), Scalar::from_int(5));
    }

    #[test]
    fn fraction_display_round_trips() {
        for text in ["(q*r)/p", "-1/2", "(a1 + t)/(p*q - 1)", "(3*q)/(2*p + 1)", "q/p^2"] {
            let x = s(text);
            let back = s(&x.to_string());
            assert_eq!(back, x, "{text} -> {x}");
        }
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        let atom = prop_oneof![
            (-3i64..4).prop_map(|n| n.to_string()),
            Just("p".to_string()),
            Just("q".to_string()),
            Just("t".to_string()),
        ];
        let poly = prop::collection::vec((atom.clone(), atom), 1..4).prop_map(|ts| {
            ts.into_iter()
                .map(|(a, b)| format!("({a})*({b})"))
                .collect::<Vec<_>>()
                .join(" + ")
        });
        (poly.clone(), poly).prop_filter_map("zero denominator", |(n, d)| {
            let den = s(&d);
            if den.is_zero() {
                None
            } else {
                Some(s(&n).div(&den).unwrap())
            }
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert!(a.sub(&a).is_zero());
            if !a.is_zero() {
                prop_assert_eq!(a.div(&a).unwrap(), Scalar::one());
            }
        }

        #[test]
        fn serialization_round_trip(a in arb_scalar()) {
            prop_assert_eq!(s(&a.to_string()), a);
        }

        #[test]
        fn substitution_commutes_with_arithmetic(a in arb_scalar(), b in arb_scalar(), v in -3i64..4) {
            let mut bind = Bindings::new();
            bind.insert("p".into(), Scalar::from_int(v));
            let lhs = a.mul(&b).add(&a).substitute(&bind);
            let (sa, sb) = (a.substitute(&bind), b.substitute(&bind));
            if let (Ok(lhs), Ok(sa), Ok(sb)) = (lhs, sa, sb) {
                prop_assert_eq!(lhs, sa.mul(&sb).add(&sa));
            }
        }
    }
}
