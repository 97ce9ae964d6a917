//! Sparse multivariate polynomials over ℚ.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number. Always reduced with a positive denominator.
pub type Rational = BigRational;

/// Ordered list of parameter names shared by all polynomials of one computation.
pub type Vars = Arc<[String]>;

pub fn vars_from<I, S>(names: I) -> Vars
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    names.into_iter().map(Into::into).collect::<Vec<_>>().into()
}

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in the named variables `vars`. Zero coefficients are never stored.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    vars: Vars,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars {
            return self.terms == other.terms;
        }
        (self - other).is_zero()
    }
}

impl Eq for MultiPoly {}

impl MultiPoly {
    pub fn zero(vars: Vars) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Vars, c: Rational) -> Self {
        let mut p = MultiPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(p.vars.len()), c);
        }
        p
    }

    /// The variable with index `idx` in `vars`.
    pub fn var(vars: Vars, idx: usize) -> Self {
        assert!(idx < vars.len(), "variable index out of range");
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        let mut p = MultiPoly::zero(vars);
        p.terms.insert(Monomial(exps), Rational::one());
        p
    }

    /// Builds a polynomial from raw terms, dropping zeros and merging duplicates.
    pub fn from_terms<I>(vars: Vars, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = MultiPoly::zero(vars);
        for (exps, c) in terms {
            assert_eq!(exps.len(), p.vars.len(), "exponent vector length");
            p.add_term(Monomial(exps), c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Constant value if the polynomial has no variable terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Highest term in graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Re-expresses the polynomial over `vars`, which must contain every
    /// variable this polynomial actually uses.
    pub fn with_vars(&self, vars: &Vars) -> MultiPoly {
        if Arc::ptr_eq(&self.vars, vars) {
            return self.clone();
        }
        if self.vars == *vars {
            return MultiPoly {
                vars: vars.clone(),
                terms: self.terms.clone(),
            };
        }
        let map: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v))
            .collect();
        let mut out = MultiPoly::zero(vars.clone());
        for (m, c) in &self.terms {
            let mut exps = vec![0; vars.len()];
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let j = map[i].unwrap_or_else(|| {
                    panic!("variable `{}` missing from target ring", self.vars[i])
                });
                exps[j] = e;
            }
            out.add_term(Monomial(exps), c.clone());
        }
        out
    }

    /// Brings two polynomials onto a common variable list.
    pub(crate) fn unify<'a>(
        a: &'a MultiPoly,
        b: &'a MultiPoly,
    ) -> (std::borrow::Cow<'a, MultiPoly>, std::borrow::Cow<'a, MultiPoly>) {
        use std::borrow::Cow;
        if Arc::ptr_eq(&a.vars, &b.vars) || a.vars == b.vars {
            return (Cow::Borrowed(a), Cow::Borrowed(b));
        }
        if b.vars.is_empty() || (b.is_constant() && b.vars.len() < a.vars.len()) {
            return (Cow::Borrowed(a), Cow::Owned(b.with_vars(&a.vars)));
        }
        if a.vars.is_empty() || a.is_constant() {
            return (Cow::Owned(a.with_vars(&b.vars)), Cow::Borrowed(b));
        }
        if b.is_constant() {
            return (Cow::Borrowed(a), Cow::Owned(b.with_vars(&a.vars)));
        }
        let mut names: Vec<String> = a.vars.to_vec();
        for v in b.vars.iter() {
            if !names.contains(v) {
                names.push(v.clone());
            }
        }
        let vars: Vars = names.into();
        (
            Cow::Owned(a.with_vars(&vars)),
            Cow::Owned(b.with_vars(&vars)),
        )
    }

    pub fn scale(&self, k: &Rational) -> MultiPoly {
        if k.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * k))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::constant(self.vars.clone(), Rational::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Rational content: positive `c` with `self / c` having coprime integer coefficients.
    pub fn content(&self) -> Rational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return Rational::one();
        }
        Rational::new(num, den)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one(self.vars.len());
        };
        let mut g = first.0.clone();
        for m in it {
            for (gi, &e) in g.iter_mut().zip(&m.0) {
                *gi = (*gi).min(e);
            }
        }
        Monomial(g)
    }

    pub fn div_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.div(m), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &MultiPoly) -> Option<MultiPoly> {
        let (a, d) = MultiPoly::unify(self, d);
        let (dm, dc) = d.leading()?;
        let mut rem = a.into_owned();
        let mut quot = MultiPoly::zero(rem.vars.clone());
        while let Some((rm, rc)) = rem.leading() {
            if !dm.divides(rm) {
                return None;
            }
            let qm = rm.div(dm);
            let qc = rc / dc;
            for (m, c) in d.terms.iter() {
                rem.add_term(m.mul(&qm), -(c * &qc));
            }
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Formal partial derivative with respect to variable `idx`.
    pub fn derivative(&self, idx: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[idx] -= 1;
            out.add_term(Monomial(exps), c * Rational::from_integer(e.into()));
        }
        out
    }

    /// Splits `self = c·v + r` where neither `c` nor `r` involves variable
    /// `v = vars[idx]`. `None` unless `self` has degree exactly one in `v`.
    pub fn linear_in(&self, idx: usize) -> Option<(MultiPoly, MultiPoly)> {
        let mut c = MultiPoly::zero(self.vars.clone());
        let mut r = MultiPoly::zero(self.vars.clone());
        for (m, k) in &self.terms {
            match m.0[idx] {
                0 => r.add_term(m.clone(), k.clone()),
                1 => {
                    let mut exps = m.0.clone();
                    exps[idx] = 0;
                    c.add_term(Monomial(exps), k.clone());
                }
                _ => return None,
            }
        }
        (!c.is_zero()).then_some((c, r))
    }

    /// Substitutes `images[i]` for variable `i` (variables mapped to `None` stay).
    /// The result lives in `target` variables.
    pub fn compose(&self, images: &[Option<MultiPoly>], target: &Vars) -> MultiPoly {
        assert_eq!(images.len(), self.vars.len());
        let own: Vec<MultiPoly> = images
            .iter()
            .enumerate()
            .map(|(i, img)| match img {
                Some(p) => p.with_vars(target),
                None => {
                    let j = target
                        .iter()
                        .position(|v| *v == self.vars[i])
                        .expect("unbound variable missing from target ring");
                    MultiPoly::var(target.clone(), j)
                }
            })
            .collect();
        let mut out = MultiPoly::zero(target.clone());
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(target.clone(), c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = &t * &own[i].pow(e);
                }
            }
            out = &out + &t;
        }
        out
    }

    fn fmt_monomial(&self, m: &Monomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&self.vars[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }

    /// True when the polynomial is a single variable with coefficient one.
    pub fn is_atom(&self) -> bool {
        if self.terms.len() != 1 {
            return false;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        c.is_one() && m.degree() == 1
    }
}

fn fmt_rational(c: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for MultiPoly {
    /// Terms in descending graded-lex order, e.g. `a1*t - 1/2*q + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let abs = c.abs();
            if n == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                fmt_rational(&abs, f)?;
            } else {
                if !abs.is_one() {
                    fmt_rational(&abs, f)?;
                    f.write_str("*")?;
                }
                self.fmt_monomial(m, f)?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (a, b) = MultiPoly::unify(self, rhs);
        let (mut out, other) = if a.len() >= b.len() {
            (a.into_owned(), b)
        } else {
            (b.into_owned(), a)
        };
        for (m, c) in other.terms.iter() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let (a, b) = MultiPoly::unify(self, rhs);
        let mut out = a.into_owned();
        for (m, c) in b.terms.iter() {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let (a, b) = MultiPoly::unify(self, rhs);
        let mut out = MultiPoly::zero(a.vars.clone());
        for (ma, ca) in a.terms.iter() {
            for (mb, cb) in b.terms.iter() {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn xy() -> Vars {
        vars_from(["x", "y"])
    }

    #[test]
    fn linear_split() {
        let v = xy();
        // x*y + 2*x - y^2 = (y + 2)*x + (-y^2)
        let p = MultiPoly::from_terms(
            v.clone(),
            [(vec![1, 1], r(1, 1)), (vec![1, 0], r(2, 1)), (vec![0, 2], r(-1, 1))],
        );
        let (c, rest) = p.linear_in(0).unwrap();
        assert_eq!(c, MultiPoly::from_terms(v.clone(), [(vec![0, 1], r(1, 1)), (vec![0, 0], r(2, 1))]));
        assert_eq!(rest, MultiPoly::from_terms(v.clone(), [(vec![0, 2], r(-1, 1))]));
        assert!(p.linear_in(1).is_none());
        assert!(MultiPoly::var(v.clone(), 1).linear_in(0).is_none());
    }

    #[test]
    fn grlex_order_puts_higher_degree_last() {
        let a = Monomial(vec![2, 0]);
        let b = Monomial(vec![0, 3]);
        let c = Monomial(vec![1, 1]);
        assert!(a < b);
        assert!(c < a);
    }

    #[test]
    fn display_is_descending_grlex() {
        let v = xy();
        let p = MultiPoly::from_terms(
            v,
            [
                (vec![0, 0], r(2, 1)),
                (vec![1, 0], r(-1, 2)),
                (vec![1, 1], r(3, 1)),
            ],
        );
        assert_eq!(p.to_string(), "3*x*y - 1/2*x + 2");
    }

    #[test]
    fn exact_division_recovers_factor() {
        let v = xy();
        let x = MultiPoly::var(v.clone(), 0);
        let y = MultiPoly::var(v.clone(), 1);
        let a = &x + &y;
        let b = &x - &y;
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert!(prod.exact_div(&(&x + &MultiPoly::constant(v, r(1, 1)))).is_none());
    }

    #[test]
    fn mixed_variable_lists_merge() {
        let p = MultiPoly::var(vars_from(["a"]), 0);
        let q = MultiPoly::var(vars_from(["b"]), 0);
        let s = &p + &q;
        assert_eq!(s.vars().len(), 2);
        assert_eq!(s.to_string(), "a + b");
    }

    #[test]
    fn derivative_of_square() {
        let v = xy();
        let x = MultiPoly::var(v.clone(), 0);
        let y = MultiPoly::var(v.clone(), 1);
        let p = &x.pow(2) * &y;
        assert_eq!(p.derivative(0), (&x * &y).scale(&r(2, 1)));
        assert_eq!(p.derivative(1), x.pow(2));
    }
}
