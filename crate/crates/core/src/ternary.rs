//! Ternary Hom-Nambu algebras: trace-induced brackets, the Hom-Nambu
//! identity, and twisting by endomorphisms.

use crate::algebras::{pair_index, BilinearProduct, BinaryAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{axpy, basis_vector, is_zero_vector, vec_sub, zero_vector, Covector, Matrix, Vector};
use crate::report::{denominator_assumptions, strict_triples, CheckReport};
use crate::scalars::Scalar;

/// Position of `(i, j, k)`, `i < j < k < n`, in lexicographic order.
fn triple_index(n: usize, i: usize, j: usize, k: usize) -> usize {
    debug_assert!(i < j && j < k && k < n);
    let before: usize = (0..i).map(|a| (n - a - 1) * (n - a - 2) / 2).sum();
    before + pair_index(n - i - 1, j - i - 1, k - i - 1)
}

/// Sorts three indices, returning the sorted triple and the permutation
/// sign, or `None` when an index repeats.
pub(crate) fn sort3(i: usize, j: usize, k: usize) -> Option<([usize; 3], bool)> {
    let mut t = [i, j, k];
    let mut negative = false;
    for (a, b) in [(0, 1), (1, 2), (0, 1)] {
        if t[a] > t[b] {
            t.swap(a, b);
            negative = !negative;
        }
    }
    if t[0] == t[1] || t[1] == t[2] {
        None
    } else {
        Some((t, negative))
    }
}

/// Totally skew ternary algebra with a twist pair `(α₁, α₂)`.
///
/// Only `[x_i, x_j, x_k]` with `i < j < k` is stored.
#[derive(Clone, Debug, PartialEq)]
pub struct TernaryAlgebra {
    basis_names: Vec<String>,
    consts: Vec<Vector>,
    twist: (Matrix, Matrix),
}

impl TernaryAlgebra {
    /// The abelian algebra with the identity twist.
    pub fn abelian(basis_names: Vec<String>) -> Self {
        let n = basis_names.len();
        let count = if n < 3 { 0 } else { n * (n - 1) * (n - 2) / 6 };
        TernaryAlgebra {
            consts: vec![zero_vector(n); count],
            twist: (Matrix::identity(n), Matrix::identity(n)),
            basis_names,
        }
    }

    pub fn with_dim(n: usize) -> Self {
        TernaryAlgebra::abelian((1..=n).map(|i| format!("x{i}")).collect())
    }

    /// The 4-dimensional algebra `[e_i, e_j, e_k] = Σ_l ε_ijkl e_l`.
    pub fn nambu4() -> Self {
        let mut t = TernaryAlgebra::abelian((1..=4).map(|i| format!("e{i}")).collect());
        for [i, j, k] in strict_triples(4).map(|v| [v[0], v[1], v[2]]) {
            let l = (0..4).find(|l| ![i, j, k].contains(l)).unwrap();
            let p = [i, j, k, l];
            let inversions = (0..4)
                .flat_map(|a| (a + 1..4).map(move |b| (a, b)))
                .filter(|&(a, b)| p[a] > p[b])
                .count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            let mut v = zero_vector(4);
            v[l] = Scalar::from_int(sign);
            t.set_bracket(i, j, k, v).unwrap();
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn twist(&self) -> &(Matrix, Matrix) {
        &self.twist
    }

    pub fn set_twist(&mut self, alpha1: Matrix, alpha2: Matrix) -> Result<()> {
        let n = self.dim();
        for m in [&alpha1, &alpha2] {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: if m.rows() != n { m.rows() } else { m.cols() },
                });
            }
        }
        self.twist = (alpha1, alpha2);
        Ok(())
    }

    pub fn has_identity_twist(&self) -> bool {
        self.twist.0.is_identity() && self.twist.1.is_identity()
    }

    /// Sets `[x_i, x_j, x_k] = value` for distinct indices in any order.
    pub fn set_bracket(&mut self, i: usize, j: usize, k: usize, value: Vector) -> Result<()> {
        let n = self.dim();
        if value.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: value.len(),
            });
        }
        if i.max(j).max(k) >= n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: i.max(j).max(k) + 1,
            });
        }
        let Some(([a, b, c], negative)) = sort3(i, j, k) else {
            return Err(Error::HypothesisFailure(
                "a skew bracket vanishes on repeated arguments".into(),
            ));
        };
        self.consts[triple_index(n, a, b, c)] = if negative {
            value.iter().map(Scalar::neg).collect()
        } else {
            value
        };
        Ok(())
    }

    /// Stored constants for `i < j < k`.
    pub fn structure_constants(&self, i: usize, j: usize, k: usize) -> &Vector {
        &self.consts[triple_index(self.dim(), i, j, k)]
    }

    /// Signed constants for any index triple.
    pub fn bracket_basis(&self, i: usize, j: usize, k: usize) -> Vector {
        match sort3(i, j, k) {
            None => zero_vector(self.dim()),
            Some(([a, b, c], false)) => self.structure_constants(a, b, c).clone(),
            Some(([a, b, c], true)) => self
                .structure_constants(a, b, c)
                .iter()
                .map(Scalar::neg)
                .collect(),
        }
    }

    pub fn bracket(&self, u: &[Scalar], v: &[Scalar], w: &[Scalar]) -> Result<Vector> {
        let n = self.dim();
        for x in [u, v, w] {
            if x.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: x.len(),
                });
            }
        }
        let mut out = zero_vector(n);
        for (idx, [i, j, k]) in strict_triples(n).map(|t| [t[0], t[1], t[2]]).enumerate() {
            let d = &self.consts[idx];
            if is_zero_vector(d) {
                continue;
            }
            let minor = |a: usize, b: usize| v[a].mul(&w[b]).sub(&v[b].mul(&w[a]));
            let det = u[i]
                .mul(&minor(j, k))
                .sub(&u[j].mul(&minor(i, k)))
                .add(&u[k].mul(&minor(i, j)));
            if !det.is_zero() {
                axpy(&mut out, &det, d);
            }
        }
        Ok(out)
    }

    /// Nonzero stored brackets as `((i, j, k), value)`, in lexicographic order.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = ([usize; 3], &Vector)> {
        strict_triples(self.dim())
            .zip(&self.consts)
            .filter(|(_, v)| !is_zero_vector(v))
            .map(|(t, v)| ([t[0], t[1], t[2]], v))
    }

    pub fn all_scalars(&self) -> impl Iterator<Item = &Scalar> {
        self.consts
            .iter()
            .flatten()
            .chain(self.twist.0.entries())
            .chain(self.twist.1.entries())
    }

    pub fn map_scalars<F>(&self, mut f: F) -> Result<TernaryAlgebra>
    where
        F: FnMut(&Scalar) -> Result<Scalar>,
    {
        Ok(TernaryAlgebra {
            basis_names: self.basis_names.clone(),
            consts: self
                .consts
                .iter()
                .map(|v| v.iter().map(&mut f).collect::<Result<Vector>>())
                .collect::<Result<_>>()?,
            twist: (
                self.twist.0.map_entries(&mut f)?,
                self.twist.1.map_entries(&mut f)?,
            ),
        })
    }
}

pub fn bracket3(t: &TernaryAlgebra, u: &[Scalar], v: &[Scalar], w: &[Scalar]) -> Result<Vector> {
    t.bracket(u, v, w)
}

fn check_dims(n: usize, tau: &Covector, maps: &[&Matrix]) -> Result<()> {
    if tau.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: tau.dim(),
        });
    }
    for m in maps {
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: if m.rows() != n { m.rows() } else { m.cols() },
            });
        }
    }
    Ok(())
}

/// `τ(u)[v,w] + τ(v)[w,u] + τ(w)[u,v]` evaluated directly.
pub fn induced_bracket_direct<A: BilinearProduct + ?Sized>(
    a: &A,
    tau: &Covector,
    u: &[Scalar],
    v: &[Scalar],
    w: &[Scalar],
) -> Result<Vector> {
    let mut out = zero_vector(a.dim());
    for (s, x, y) in [(u, v, w), (v, w, u), (w, u, v)] {
        let k = tau.apply(s)?;
        if !k.is_zero() {
            axpy(&mut out, &k, &a.product(x, y)?);
        }
    }
    Ok(out)
}

/// The ternary algebra with bracket `[x,y,z]_τ` and twist `(alpha, beta)`.
pub fn induce_ternary(
    a: &BinaryAlgebra,
    tau: &Covector,
    alpha: &Matrix,
    beta: &Matrix,
) -> Result<TernaryAlgebra> {
    let n = a.dim();
    check_dims(n, tau, &[alpha, beta])?;
    let mut t = TernaryAlgebra::abelian(a.basis_names().to_vec());
    t.set_twist(alpha.clone(), beta.clone())?;
    let te = tau.entries();
    for (idx, [i, j, k]) in strict_triples(n).map(|v| [v[0], v[1], v[2]]).enumerate() {
        let mut d = zero_vector(n);
        for (s, p, q) in [(i, j, k), (j, k, i), (k, i, j)] {
            if !te[s].is_zero() {
                axpy(&mut d, &te[s], &a.bracket_basis(p, q));
            }
        }
        t.consts[idx] = d;
    }
    #[cfg(debug_assertions)]
    {
        let r = check_ternary_skew_equivalence(a, tau)?;
        debug_assert!(r.holds_ok());
        for [i, j, k] in strict_triples(n).map(|v| [v[0], v[1], v[2]]) {
            let e = |x| basis_vector(n, x);
            let direct = induced_bracket_direct(a, tau, &e(k), &e(i), &e(j))?;
            debug_assert_eq!(&direct, t.structure_constants(i, j, k));
        }
    }
    Ok(t)
}

const PERMUTATIONS: [([usize; 3], bool); 6] = [
    ([0, 1, 2], false),
    ([0, 2, 1], true),
    ([1, 0, 2], true),
    ([1, 2, 0], false),
    ([2, 0, 1], false),
    ([2, 1, 0], true),
];

/// Checks that the directly expanded induced bracket is alternating: each
/// permutation of a basis triple gives the signed sorted value, and
/// repeated arguments give zero.
pub fn check_ternary_skew_equivalence<A: BilinearProduct + ?Sized>(
    a: &A,
    tau: &Covector,
) -> Result<CheckReport> {
    let n = a.dim();
    if tau.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: tau.dim(),
        });
    }
    let e = |x| basis_vector(n, x);
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                let t = [i, j, k];
                let sorted = induced_bracket_direct(a, tau, &e(i), &e(j), &e(k))?;
                if (i == j || j == k) && !is_zero_vector(&sorted) {
                    return Ok(CheckReport::fails("skew", t.to_vec(), sorted));
                }
                for (p, negative) in PERMUTATIONS {
                    let w = [t[p[0]], t[p[1]], t[p[2]]];
                    let v = induced_bracket_direct(a, tau, &e(w[0]), &e(w[1]), &e(w[2]))?;
                    let expected: Vector = if negative {
                        sorted.iter().map(Scalar::neg).collect()
                    } else {
                        sorted.clone()
                    };
                    let r = vec_sub(&v, &expected);
                    if !is_zero_vector(&r) {
                        return Ok(CheckReport::fails("skew", w.to_vec(), r));
                    }
                }
            }
        }
    }
    Ok(CheckReport::holds("skew"))
}

/// Index range of the Hom-Nambu check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum NambuMode {
    /// Every basis 5-tuple.
    #[default]
    Full,
    /// Only tuples with `x₃ < x₄ < x₅`. The residual is alternating in
    /// `(x₃, x₄, x₅)` only when `α₁ = α₂`; use with care otherwise.
    Reduced,
}

/// Checks
/// `[α₁x₁, α₂x₂, [x₃,x₄,x₅]] = [[x₁,x₂,x₃], α₁x₄, α₂x₅]
///   + [α₁x₃, [x₁,x₂,x₄], α₂x₅] + [α₁x₃, α₂x₄, [x₁,x₂,x₅]]`
/// on every basis 5-tuple.
pub fn check_hom_nambu(t: &TernaryAlgebra) -> Result<CheckReport> {
    check_hom_nambu_with(t, NambuMode::Full)
}

pub fn check_hom_nambu_with(t: &TernaryAlgebra, mode: NambuMode) -> Result<CheckReport> {
    let n = t.dim();
    let (a1, a2) = &t.twist;
    let c1: Vec<Vector> = (0..n).map(|c| a1.column(c)).collect();
    let c2: Vec<Vector> = (0..n).map(|c| a2.column(c)).collect();
    // ad[p][q] is y -> [α₁e_p, α₂e_q, y]. By skew-symmetry every term of the
    // identity is one of these applied to a basis bracket:
    //   [B, α₁e_d, α₂e_e] = ad[d][e] B,  [α₁e_c, B, α₂e_e] = -ad[c][e] B.
    let mut ad = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            let cols: Vec<Vector> = (0..n)
                .map(|l| t.bracket(&c1[p], &c2[q], &basis_vector(n, l)))
                .collect::<Result<_>>()?;
            ad.push(Matrix::from_columns(&cols)?);
        }
    }
    let mut b = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                b.push(t.bracket_basis(i, j, k));
            }
        }
    }
    let bi = |i: usize, j: usize, k: usize| &b[(i * n + j) * n + k];
    let adi = |p: usize, q: usize| &ad[p * n + q];
    let apply = |m: &Matrix, v: &Vector| -> Result<Option<Vector>> {
        if is_zero_vector(v) {
            Ok(None)
        } else {
            Ok(Some(m.apply(v)?))
        }
    };

    let tuples = (0..n.pow(5)).filter_map(move |mut x| {
        let mut tup = [0usize; 5];
        for slot in tup.iter_mut().rev() {
            *slot = x % n;
            x /= n;
        }
        match mode {
            NambuMode::Full => Some(tup.to_vec()),
            NambuMode::Reduced => (tup[2] < tup[3] && tup[3] < tup[4]).then(|| tup.to_vec()),
        }
    });
    let report = CheckReport::scan("hom-nambu", tuples, |tup| {
        let [a, b_, c, d, e] = [tup[0], tup[1], tup[2], tup[3], tup[4]];
        let mut r = zero_vector(n);
        let terms = [
            (adi(a, b_), bi(c, d, e), false),
            (adi(d, e), bi(a, b_, c), true),
            (adi(c, e), bi(a, b_, d), false),
            (adi(c, d), bi(a, b_, e), true),
        ];
        for (m, v, subtract) in terms {
            if let Some(w) = apply(m, v)? {
                for (x, y) in r.iter_mut().zip(&w) {
                    if subtract {
                        *x -= y;
                    } else {
                        *x += y;
                    }
                }
            }
        }
        Ok(r)
    })?;
    Ok(report.with_assumptions(denominator_assumptions(t.all_scalars())))
}

fn intertwine(
    check: &str,
    f: &Matrix,
    pairs: [(&Matrix, &Matrix, &str); 2],
) -> Result<Option<CheckReport>> {
    for (src, dst, name) in pairs {
        // f ∘ src = dst ∘ f, compared column by column.
        let lhs = f.compose(src)?;
        let rhs = dst.compose(f)?;
        for c in 0..lhs.cols() {
            let r = vec_sub(&lhs.column(c), &rhs.column(c));
            if !is_zero_vector(&r) {
                return Ok(Some(CheckReport::fails(check, vec![c], r).with_condition(name)));
            }
        }
    }
    Ok(None)
}

/// Checks that `f: T → T'` maps brackets to brackets and intertwines both
/// twist maps.
pub fn check_ternary_morphism(
    t: &TernaryAlgebra,
    t2: &TernaryAlgebra,
    f: &Matrix,
) -> Result<CheckReport> {
    let (n, m) = (t.dim(), t2.dim());
    if f.cols() != n || f.rows() != m {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: f.cols(),
        });
    }
    morphism_report("morphism", t, t2, f)
}

/// Checks `ρ([x_i,x_j,x_k]) = [ρx_i, ρx_j, ρx_k]` and `ρ∘α_i = α_i∘ρ`.
pub fn check_ternary_endomorphism(t: &TernaryAlgebra, rho: &Matrix) -> Result<CheckReport> {
    let n = t.dim();
    if rho.rows() != n || rho.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: if rho.rows() != n { rho.rows() } else { rho.cols() },
        });
    }
    morphism_report("endomorphism", t, t, rho)
}

fn morphism_report(
    check: &str,
    t: &TernaryAlgebra,
    t2: &TernaryAlgebra,
    f: &Matrix,
) -> Result<CheckReport> {
    let cols: Vec<Vector> = (0..f.cols()).map(|c| f.column(c)).collect();
    let report = CheckReport::scan(check, strict_triples(t.dim()), |w| {
        let lhs = f.apply(t.structure_constants(w[0], w[1], w[2]))?;
        let rhs = t2.bracket(&cols[w[0]], &cols[w[1]], &cols[w[2]])?;
        Ok(vec_sub(&lhs, &rhs))
    })?;
    let report = if report.holds_ok() {
        let pairs = [
            (&t.twist.0, &t2.twist.0, "twist-1"),
            (&t.twist.1, &t2.twist.1, "twist-2"),
        ];
        intertwine(check, f, pairs)?.unwrap_or(report)
    } else {
        report.with_condition("bracket")
    };
    Ok(report.with_assumptions(denominator_assumptions(
        t.all_scalars().chain(t2.all_scalars()).chain(f.entries()),
    )))
}

/// The algebra with bracket `ρ∘[·,·,·]` and twist `(ρ, ρ)`.
pub fn twist_by_endomorphism(t: &TernaryAlgebra, rho: &Matrix) -> Result<TernaryAlgebra> {
    if !t.has_identity_twist() {
        return Err(Error::AlreadyTwisted);
    }
    if !check_ternary_endomorphism(t, rho)?.holds_ok() {
        return Err(Error::NotAnEndomorphism);
    }
    let mut out = t.clone();
    for c in out.consts.iter_mut() {
        *c = rho.apply(c)?;
    }
    out.twist = (rho.clone(), rho.clone());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::BilinearTable;
    use crate::linalg::vec_add;

    fn ints(v: &[i64]) -> Vector {
        v.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    fn diag(d: &[i64]) -> Matrix {
        let n = d.len();
        let mut m = Matrix::zeros(n, n);
        for (i, &x) in d.iter().enumerate() {
            m.set(i, i, Scalar::from_int(x));
        }
        m
    }

    #[test]
    fn scalar_twists_preserve_the_identity() {
        let mut t = TernaryAlgebra::nambu4();
        t.set_twist(Matrix::identity(4), Matrix::scalar(4, Scalar::from_int(2)))
            .unwrap();
        assert!(check_hom_nambu(&t).unwrap().holds_ok());
    }

    /// Levi-Civita symbol by brute-force permutation parity.
    fn epsilon(idx: [usize; 4]) -> i64 {
        let mut seen = [false; 4];
        for &i in &idx {
            if seen[i] {
                return 0;
            }
            seen[i] = true;
        }
        let mut p = idx;
        let mut sign = 1;
        for i in 0..4 {
            while p[i] != i {
                let j = p[i];
                p.swap(i, j);
                sign = -sign;
            }
        }
        sign
    }

    /// Naive oracle: the identity residual evaluated with full trilinear
    /// expansion on explicit vectors.
    fn naive_residual(t: &TernaryAlgebra, tup: [usize; 5]) -> Vector {
        let n = t.dim();
        let e = |i| basis_vector(n, i);
        let (a1, a2) = t.twist();
        let br = |u: &Vector, v: &Vector, w: &Vector| t.bracket(u, v, w).unwrap();
        let al1 = |v: &Vector| a1.apply(v).unwrap();
        let al2 = |v: &Vector| a2.apply(v).unwrap();
        let [x1, x2, x3, x4, x5] = tup.map(e);
        let lhs = br(&al1(&x1), &al2(&x2), &br(&x3, &x4, &x5));
        let r1 = br(&br(&x1, &x2, &x3), &al1(&x4), &al2(&x5));
        let r2 = br(&al1(&x3), &br(&x1, &x2, &x4), &al2(&x5));
        let r3 = br(&al1(&x3), &al2(&x4), &br(&x1, &x2, &x5));
        vec_sub(&lhs, &vec_add(&vec_add(&r1, &r2), &r3))
    }

    #[test]
    fn nambu4_matches_levi_civita() {
        let t = TernaryAlgebra::nambu4();
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    let expected: Vector =
                        (0..4).map(|l| Scalar::from_int(epsilon([i, j, k, l]))).collect();
                    assert_eq!(t.bracket_basis(i, j, k), expected);
                }
            }
        }
        let e = |i| basis_vector(4, i);
        assert_eq!(bracket3(&t, &e(0), &e(1), &e(2)).unwrap(), e(3));
        assert_eq!(
            bracket3(&t, &e(1), &e(0), &e(2)).unwrap(),
            ints(&[0, 0, 0, -1])
        );
        let u = ints(&[1, 2, 3, 4]);
        assert!(is_zero_vector(&bracket3(&t, &u, &u, &e(2)).unwrap()));
    }

    #[test]
    fn bracket_is_trilinear() {
        let t = TernaryAlgebra::nambu4();
        let (u, v, w, z) = (ints(&[1, -1, 2, 0]), ints(&[0, 3, 1, 1]), ints(&[2, 0, 0, -1]), ints(&[1, 1, 1, 1]));
        let lhs = bracket3(&t, &vec_add(&u, &z), &v, &w).unwrap();
        let rhs = vec_add(&bracket3(&t, &u, &v, &w).unwrap(), &bracket3(&t, &z, &v, &w).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn nambu4_filippov_against_naive_oracle() {
        let t = TernaryAlgebra::nambu4();
        assert!(check_hom_nambu(&t).unwrap().holds_ok());
        for x in 0..1024usize {
            let tup = [x / 256, x / 64 % 4, x / 16 % 4, x / 4 % 4, x % 4];
            assert!(is_zero_vector(&naive_residual(&t, tup)));
        }
    }

    #[test]
    fn scaled_twist_fails_with_valid_witness() {
        let mut t = TernaryAlgebra::nambu4();
        // A scalar twist rescales both sides equally, so use a diagonal one.
        t.set_twist(Matrix::identity(4), diag(&[1, 1, 1, 2])).unwrap();
        let r = check_hom_nambu(&t).unwrap();
        assert!(!r.holds_ok());
        let w = r.witness.clone().unwrap();
        let tup = [w[0], w[1], w[2], w[3], w[4]];
        assert_eq!(Some(naive_residual(&t, tup)), r.residual);
        // First witness is lexicographically first: no earlier tuple fails.
        let first = (0..1024usize)
            .map(|x| [x / 256, x / 64 % 4, x / 16 % 4, x / 4 % 4, x % 4])
            .find(|&tup| !is_zero_vector(&naive_residual(&t, tup)))
            .unwrap();
        assert_eq!(w, first.to_vec());
    }

    #[test]
    fn induced_gl2_trace() {
        let a = BinaryAlgebra::general_linear(2);
        let tr = Covector::new(ints(&[1, 0, 0, 1]));
        let id = Matrix::identity(4);
        let t = induce_ternary(&a, &tr, &id, &id).unwrap();
        assert_eq!(t.structure_constants(0, 1, 2), &ints(&[1, 0, 0, -1]));
        // Lie algebra with identity twists gives a Nambu-Lie algebra.
        assert!(check_hom_nambu(&t).unwrap().holds_ok());
        let zero = induce_ternary(&a, &Covector::zeros(4), &id, &id).unwrap();
        assert_eq!(zero.nonzero_brackets().count(), 0);
    }

    #[test]
    fn tau_annihilates_induced_brackets() {
        let a = BinaryAlgebra::general_linear(2);
        let tr = Covector::new(ints(&[1, 0, 0, 1]));
        let id = Matrix::identity(4);
        let t = induce_ternary(&a, &tr, &id, &id).unwrap();
        for (_, v) in t.nonzero_brackets() {
            assert!(tr.apply(v).unwrap().is_zero());
        }
    }

    #[test]
    fn skew_equivalence() {
        let a = BinaryAlgebra::general_linear(2);
        let tr = Covector::new(ints(&[1, 0, 0, 1]));
        assert!(check_ternary_skew_equivalence(&a, &tr).unwrap().holds_ok());

        let mut table = BilinearTable::zero(3);
        table.set(0, 1, ints(&[0, 0, 1]));
        table.set(1, 0, ints(&[0, 0, 1]));
        let tau = Covector::new(ints(&[0, 0, 1]));
        let r = check_ternary_skew_equivalence(&table, &tau).unwrap();
        assert!(!r.holds_ok());
        let w = r.witness.unwrap();
        let e = |i| basis_vector(3, i);
        let direct = induced_bracket_direct(&table, &tau, &e(w[0]), &e(w[1]), &e(w[2])).unwrap();
        assert!(!is_zero_vector(&direct));
    }

    #[test]
    fn twisting_nambu4() {
        let t = TernaryAlgebra::nambu4();
        assert_eq!(twist_by_endomorphism(&t, &Matrix::identity(4)).unwrap(), t);

        let minus = Matrix::scalar(4, Scalar::from_int(-1));
        assert!(check_ternary_endomorphism(&t, &minus).unwrap().holds_ok());
        let tw = twist_by_endomorphism(&t, &minus).unwrap();
        assert_eq!(tw.structure_constants(0, 1, 2), &ints(&[0, 0, 0, -1]));
        assert_eq!(tw.twist(), &(minus.clone(), minus.clone()));
        assert!(check_hom_nambu(&tw).unwrap().holds_ok());
        assert_eq!(twist_by_endomorphism(&tw, &minus), Err(Error::AlreadyTwisted));

        let two = Matrix::scalar(4, Scalar::from_int(2));
        assert!(!check_ternary_endomorphism(&t, &two).unwrap().holds_ok());
        assert_eq!(twist_by_endomorphism(&t, &two), Err(Error::NotAnEndomorphism));
    }

    #[test]
    fn morphisms() {
        let t = TernaryAlgebra::nambu4();
        assert!(check_ternary_morphism(&t, &t, &Matrix::identity(4)).unwrap().holds_ok());
        assert!(check_ternary_morphism(&t, &t, &Matrix::zeros(4, 4)).unwrap().holds_ok());
        let swap = Matrix::from_columns(&[
            basis_vector(4, 1),
            basis_vector(4, 0),
            basis_vector(4, 2),
            basis_vector(4, 3),
        ])
        .unwrap();
        let r = check_ternary_morphism(&t, &t, &swap).unwrap();
        assert!(!r.holds_ok());
        assert_eq!(r.condition.as_deref(), Some("bracket"));
        // Swapping e1, e2 flips ε; negating the brackets repairs it.
        let mut flipped = t.clone();
        for [i, j, k] in strict_triples(4).map(|v| [v[0], v[1], v[2]]) {
            let v = t.structure_constants(i, j, k).iter().map(Scalar::neg).collect();
            flipped.set_bracket(i, j, k, v).unwrap();
        }
        assert!(check_ternary_morphism(&t, &flipped, &swap).unwrap().holds_ok());
        assert!(check_ternary_morphism(&t, &t, &Matrix::zeros(3, 4)).is_err());
    }

    #[test]
    fn reduced_mode_agrees_when_twists_coincide() {
        let t = TernaryAlgebra::nambu4();
        let minus = Matrix::scalar(4, Scalar::from_int(-1));
        let tw = twist_by_endomorphism(&t, &minus).unwrap();
        for x in [&t, &tw] {
            assert_eq!(
                check_hom_nambu_with(x, NambuMode::Reduced).unwrap().verdict,
                check_hom_nambu(x).unwrap().verdict
            );
        }
        let mut bad = t.clone();
        let mut shear = Matrix::identity(4);
        shear.set(0, 1, Scalar::one());
        bad.set_twist(shear.clone(), shear).unwrap();
        assert!(!check_hom_nambu_with(&bad, NambuMode::Reduced).unwrap().holds_ok());
        assert!(!check_hom_nambu(&bad).unwrap().holds_ok());
    }

    #[test]
    fn sort3_signs() {
        assert_eq!(sort3(0, 1, 2), Some(([0, 1, 2], false)));
        assert_eq!(sort3(2, 1, 0), Some(([0, 1, 2], true)));
        assert_eq!(sort3(1, 2, 0), Some(([0, 1, 2], false)));
        assert_eq!(sort3(1, 1, 0), None);
        let n = 5;
        let idx: Vec<usize> = strict_triples(n).map(|t| triple_index(n, t[0], t[1], t[2])).collect();
        assert_eq!(idx, (0..10).collect::<Vec<_>>());
    }
}
