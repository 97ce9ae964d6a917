use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::poly::{MultiPoly, Rational, Vars};
use crate::error::{Error, Result};

/// Exact rational function `num / den` in named parameters.
///
/// No multivariate GCD is taken: two scalars are equal when their
/// cross products agree. After every operation the fraction is tidied by
/// cancelling common monomial factors, constant content and exact
/// polynomial quotients, and constants are kept in a plain rational form.
#[derive(Clone, Debug)]
pub struct Scalar(Repr);

#[derive(Clone, Debug)]
enum Repr {
    Const(Rational),
    /// Never equal to a constant. A constant `den` is exactly one.
    Frac { num: MultiPoly, den: MultiPoly },
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar(Repr::Const(Rational::zero()))
    }

    pub fn one() -> Self {
        Scalar(Repr::Const(Rational::one()))
    }

    pub fn from_rational(r: Rational) -> Self {
        Scalar(Repr::Const(r))
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(Repr::Const(Rational::from_integer(n.into())))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Scalar(Repr::Const(Rational::new(n.into(), d.into())))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        match p.as_constant() {
            Some(c) => Scalar(Repr::Const(c)),
            None => Scalar(Repr::Frac {
                den: MultiPoly::constant(p.vars().clone(), Rational::one()),
                num: p,
            })
            .normalized(),
        }
    }

    /// The parameter with index `idx` of `vars`.
    pub fn param(vars: &Vars, idx: usize) -> Self {
        Scalar::from_poly(MultiPoly::var(vars.clone(), idx))
    }

    /// Builds `num / den`.
    pub fn from_fraction(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar(Repr::Frac { num, den }).normalized())
    }

    pub fn numerator(&self) -> MultiPoly {
        match &self.0 {
            Repr::Const(c) => MultiPoly::constant(Vars::from(Vec::new()), c.clone()),
            Repr::Frac { num, .. } => num.clone(),
        }
    }

    pub fn denominator(&self) -> MultiPoly {
        match &self.0 {
            Repr::Const(_) => MultiPoly::constant(Vars::from(Vec::new()), Rational::one()),
            Repr::Frac { den, .. } => den.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Const(c) => c.is_zero(),
            Repr::Frac { num, .. } => num.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0, Repr::Const(c) if c.is_one())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match &self.0 {
            Repr::Const(c) => Some(c),
            Repr::Frac { .. } => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        matches!(self.0, Repr::Const(_))
    }

    /// Denominator polynomial if it is not constant, i.e. a genericity
    /// condition under which this value is defined.
    pub fn parametric_denominator(&self) -> Option<&MultiPoly> {
        match &self.0 {
            Repr::Frac { den, .. } => Some(den),
            Repr::Const(_) => None,
        }
    }

    /// Number of terms in the numerator; used to rank pivot candidates.
    pub fn weight(&self) -> usize {
        match &self.0 {
            Repr::Const(c) => usize::from(!c.is_zero()),
            Repr::Frac { num, den } => num.len() * 4 + den.len(),
        }
    }

    /// Names of parameters that occur in this value.
    pub fn parameters(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Repr::Frac { num, den } = &self.0 {
            for p in [num, den] {
                for (m, _) in p.terms() {
                    for (i, &e) in m.0.iter().enumerate() {
                        let name = &p.vars()[i];
                        if e > 0 && !out.contains(name) {
                            out.push(name.clone());
                        }
                    }
                }
            }
        }
        out
    }

    fn normalized(self) -> Scalar {
        let Repr::Frac { num, den } = self.0 else {
            return self;
        };
        if num.is_zero() {
            return Scalar::zero();
        }
        if let Some(c) = den.as_constant() {
            let inv = c.recip();
            return match num.as_constant() {
                Some(n) => Scalar(Repr::Const(n * inv)),
                None => Scalar(Repr::Frac {
                    den: MultiPoly::constant(num.vars().clone(), Rational::one()),
                    num: num.scale(&inv),
                }),
            };
        }
        let (num, den) = MultiPoly::unify(&num, &den);
        let (mut num, mut den) = (num.into_owned(), den.into_owned());
        let nm = num.monomial_content();
        let dm = den.monomial_content();
        let common = super::poly::Monomial(
            nm.0.iter().zip(&dm.0).map(|(a, b)| (*a).min(*b)).collect(),
        );
        if !common.is_one() {
            num = num.div_monomial(&common);
            den = den.div_monomial(&common);
        }
        if let Some(q) = num.exact_div(&den) {
            return Scalar::from_poly(q);
        }
        if let Some(c) = den.as_constant() {
            return Scalar(Repr::Frac {
                den: den.scale(&c.recip()),
                num: num.scale(&c.recip()),
            })
            .normalized();
        }
        let (_, lc) = den.leading().expect("nonzero denominator");
        let mut k = den.content();
        if lc.is_negative() {
            k = -k;
        }
        let inv = k.recip();
        if !inv.is_one() {
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Scalar(Repr::Frac { num, den })
    }

    fn as_fraction(&self) -> (MultiPoly, MultiPoly) {
        match &self.0 {
            Repr::Const(c) => {
                let v = Vars::from(Vec::new());
                (MultiPoly::constant(v.clone(), c.clone()), MultiPoly::constant(v, Rational::one()))
            }
            Repr::Frac { num, den } => (num.clone(), den.clone()),
        }
    }

    fn den_is_one(&self) -> bool {
        match &self.0 {
            Repr::Const(_) => true,
            Repr::Frac { den, .. } => den.as_constant().is_some_and(|c| c.is_one()),
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Const(a), Repr::Const(b)) => Scalar(Repr::Const(a + b)),
            _ if self.is_zero() => other.clone(),
            _ if other.is_zero() => self.clone(),
            _ => {
                let (n1, d1) = self.as_fraction();
                let (n2, d2) = other.as_fraction();
                if self.den_is_one() && other.den_is_one() {
                    return Scalar::from_poly(&n1 + &n2);
                }
                if d1 == d2 {
                    return Scalar(Repr::Frac { num: &n1 + &n2, den: d1 }).normalized();
                }
                Scalar(Repr::Frac {
                    num: &(&n1 * &d2) + &(&n2 * &d1),
                    den: &d1 * &d2,
                })
                .normalized()
            }
        }
    }

    pub fn neg(&self) -> Scalar {
        match &self.0 {
            Repr::Const(a) => Scalar(Repr::Const(-a)),
            Repr::Frac { num, den } => Scalar(Repr::Frac {
                num: -num,
                den: den.clone(),
            }),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Const(a), Repr::Const(b)) => Scalar(Repr::Const(a - b)),
            _ => self.add(&other.neg()),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Const(a), Repr::Const(b)) => Scalar(Repr::Const(a * b)),
            _ if self.is_zero() || other.is_zero() => Scalar::zero(),
            (Repr::Const(a), Repr::Frac { num, den }) | (Repr::Frac { num, den }, Repr::Const(a)) => {
                if a.is_one() {
                    return Scalar(Repr::Frac {
                        num: num.clone(),
                        den: den.clone(),
                    });
                }
                Scalar(Repr::Frac {
                    num: num.scale(a),
                    den: den.clone(),
                })
            }
            _ => {
                let (n1, d1) = self.as_fraction();
                let (n2, d2) = other.as_fraction();
                if self.den_is_one() && other.den_is_one() {
                    return Scalar::from_poly(&n1 * &n2);
                }
                Scalar(Repr::Frac {
                    num: &n1 * &n2,
                    den: &d1 * &d2,
                })
                .normalized()
            }
        }
    }

    pub fn recip(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Const(a) => Scalar(Repr::Const(a.recip())),
            Repr::Frac { num, den } => Scalar(Repr::Frac {
                num: den.clone(),
                den: num.clone(),
            })
            .normalized(),
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match (&self.0, &other.0) {
            (Repr::Const(a), Repr::Const(b)) => Ok(Scalar(Repr::Const(a / b))),
            _ => Ok(self.mul(&other.recip()?)),
        }
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Replaces named parameters by scalar values.
    pub fn substitute(&self, bindings: &BTreeMap<String, Scalar>) -> Result<Scalar> {
        let Repr::Frac { num, den } = &self.0 else {
            return Ok(self.clone());
        };
        let n = eval_poly(num, bindings);
        let d = eval_poly(den, bindings);
        if d.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        n.div(&d)
    }
}

fn eval_poly(p: &MultiPoly, bindings: &BTreeMap<String, Scalar>) -> Scalar {
    let vars = p.vars();
    let images: Vec<Scalar> = vars
        .iter()
        .enumerate()
        .map(|(i, v)| match bindings.get(v) {
            Some(s) => s.clone(),
            None => Scalar::param(vars, i),
        })
        .collect();
    let mut acc = Scalar::zero();
    for (m, c) in p.terms() {
        let mut t = Scalar::from_rational(c.clone());
        for (i, &e) in m.0.iter().enumerate() {
            if e > 0 {
                t = t.mul(&images[i].pow(e));
            }
        }
        acc = acc.add(&t);
    }
    acc
}

impl PartialEq for Scalar {
    /// Cross-multiplication equality.
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Const(a), Repr::Const(b)) => a == b,
            _ => {
                let (n1, d1) = self.as_fraction();
                let (n2, d2) = other.as_fraction();
                (&(&n1 * &d2) - &(&n2 * &d1)).is_zero()
            }
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::from_rational(r)
    }
}

impl fmt::Display for Scalar {
    /// Canonical text in the parse grammar, e.g. `-1/2` or `(q*r)/p`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Const(c) => {
                if c.is_integer() {
                    write!(f, "{}", c.numer())
                } else {
                    write!(f, "{}/{}", c.numer(), c.denom())
                }
            }
            Repr::Frac { num, den } => {
                if den.as_constant().is_some() {
                    return write!(f, "{num}");
                }
                if den.is_atom() {
                    write!(f, "({num})/{den}")
                } else {
                    write!(f, "({num})/({den})")
                }
            }
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $call:ident) => {
        impl std::ops::$tr for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                Scalar::$call(self, rhs)
            }
        }
        impl std::ops::$tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                Scalar::$call(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}

impl std::ops::AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if let (Repr::Const(a), Repr::Const(b)) = (&mut self.0, &rhs.0) {
            *a += b;
            return;
        }
        *self = Scalar::add(self, rhs);
    }
}

impl std::ops::SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if let (Repr::Const(a), Repr::Const(b)) = (&mut self.0, &rhs.0) {
            *a -= b;
            return;
        }
        *self = Scalar::sub(self, rhs);
    }
}
