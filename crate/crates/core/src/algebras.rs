//! Binary algebras given by structure constants, and the Hom-Lie checks on them.

use crate::error::{Error, Result};
use crate::linalg::{
    axpy, basis_vector, nullspace, vec_sub, zero_vector, Covector, Matrix, Subspace, Vector,
};
use crate::report::{
    denominator_assumptions, sorted_triples, strict_pairs, CheckReport,
};
use crate::scalars::Scalar;

/// A bilinear product on a finite-dimensional space, known on basis pairs.
pub trait BilinearProduct {
    fn dim(&self) -> usize;

    /// Coordinates of `x_i · x_j`.
    fn product_basis(&self, i: usize, j: usize) -> Vector;

    fn product(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        let n = self.dim();
        for w in [u, v] {
            if w.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: w.len(),
                });
            }
        }
        let mut out = zero_vector(n);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let p = self.product_basis(i, j);
                axpy(&mut out, &ui.mul(vj), &p);
            }
        }
        Ok(out)
    }
}

pub(crate) fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Skew-symmetric binary algebra. Only `[x_i, x_j]` with `i < j` is stored;
/// the other orders are derived, so skew-symmetry holds by construction.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryAlgebra {
    basis_names: Vec<String>,
    consts: Vec<Vector>,
}

impl BinaryAlgebra {
    /// The abelian algebra on the given basis.
    pub fn abelian(basis_names: Vec<String>) -> Self {
        let n = basis_names.len();
        BinaryAlgebra {
            consts: vec![zero_vector(n); n * n.saturating_sub(1) / 2],
            basis_names,
        }
    }

    pub fn with_dim(n: usize) -> Self {
        BinaryAlgebra::abelian((1..=n).map(|i| format!("x{i}")).collect())
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// Sets `[x_i, x_j] = value`; for `i > j` the negation is stored.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: Vector) -> Result<()> {
        let n = self.dim();
        if value.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: value.len(),
            });
        }
        if i >= n || j >= n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: i.max(j) + 1,
            });
        }
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.consts[pair_index(n, i, j)] = value,
            std::cmp::Ordering::Greater => {
                self.consts[pair_index(n, j, i)] = value.iter().map(Scalar::neg).collect()
            }
            std::cmp::Ordering::Equal => {
                return Err(Error::HypothesisFailure(
                    "a skew bracket vanishes on equal arguments".into(),
                ))
            }
        }
        Ok(())
    }

    /// Stored constants for `i < j`.
    pub fn structure_constants(&self, i: usize, j: usize) -> &Vector {
        &self.consts[pair_index(self.dim(), i, j)]
    }

    /// Signed structure constants for any ordered pair.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.structure_constants(i, j).clone(),
            std::cmp::Ordering::Greater => {
                self.structure_constants(j, i).iter().map(Scalar::neg).collect()
            }
            std::cmp::Ordering::Equal => zero_vector(self.dim()),
        }
    }

    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        let n = self.dim();
        for w in [u, v] {
            if w.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: w.len(),
                });
            }
        }
        let mut out = zero_vector(n);
        for i in 0..n {
            for j in i + 1..n {
                let k = u[i].mul(&v[j]).sub(&u[j].mul(&v[i]));
                if !k.is_zero() {
                    axpy(&mut out, &k, self.structure_constants(i, j));
                }
            }
        }
        Ok(out)
    }

    pub fn all_scalars(&self) -> impl Iterator<Item = &Scalar> {
        self.consts.iter().flatten()
    }

    pub fn map_scalars<F>(&self, mut f: F) -> Result<BinaryAlgebra>
    where
        F: FnMut(&Scalar) -> Result<Scalar>,
    {
        Ok(BinaryAlgebra {
            basis_names: self.basis_names.clone(),
            consts: self
                .consts
                .iter()
                .map(|v| v.iter().map(&mut f).collect::<Result<Vector>>())
                .collect::<Result<_>>()?,
        })
    }

    /// The algebra with bracket `rho ∘ [·,·]`.
    pub fn compose_with(&self, rho: &Matrix) -> Result<BinaryAlgebra> {
        let mut out = self.clone();
        for c in out.consts.iter_mut() {
            *c = rho.apply(c)?;
        }
        Ok(out)
    }

    /// `gl(n)` with the commutator bracket on matrix units `E_ij`
    /// ordered row-major.
    pub fn general_linear(n: usize) -> BinaryAlgebra {
        let names = (0..n * n)
            .map(|k| format!("E{}{}", k / n + 1, k % n + 1))
            .collect();
        let mut a = BinaryAlgebra::abelian(names);
        let dim = n * n;
        for p in 0..dim {
            for q in p + 1..dim {
                let (i, j) = (p / n, p % n);
                let (k, l) = (q / n, q % n);
                // E_ij E_kl - E_kl E_ij = δ_jk E_il - δ_li E_kj
                let mut v = zero_vector(dim);
                if j == k {
                    v[i * n + l] = v[i * n + l].add(&Scalar::one());
                }
                if l == i {
                    v[k * n + j] = v[k * n + j].sub(&Scalar::one());
                }
                a.consts[pair_index(dim, p, q)] = v;
            }
        }
        a
    }
}

impl BilinearProduct for BinaryAlgebra {
    fn dim(&self) -> usize {
        BinaryAlgebra::dim(self)
    }

    fn product_basis(&self, i: usize, j: usize) -> Vector {
        self.bracket_basis(i, j)
    }

    fn product(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        self.bracket(u, v)
    }
}

/// Bilinear product with a full, unconstrained table `x_i · x_j`.
#[derive(Clone, Debug)]
pub struct BilinearTable {
    dim: usize,
    table: Vec<Vector>,
}

impl BilinearTable {
    pub fn zero(dim: usize) -> Self {
        BilinearTable {
            dim,
            table: vec![zero_vector(dim); dim * dim],
        }
    }

    pub fn from_algebra(a: &BinaryAlgebra) -> Self {
        let n = a.dim();
        let mut t = BilinearTable::zero(n);
        for i in 0..n {
            for j in 0..n {
                t.table[i * n + j] = a.bracket_basis(i, j);
            }
        }
        t
    }

    pub fn set(&mut self, i: usize, j: usize, value: Vector) {
        assert_eq!(value.len(), self.dim);
        self.table[i * self.dim + j] = value;
    }
}

impl BilinearProduct for BilinearTable {
    fn dim(&self) -> usize {
        self.dim
    }

    fn product_basis(&self, i: usize, j: usize) -> Vector {
        self.table[i * self.dim + j].clone()
    }
}

pub fn bracket2(a: &BinaryAlgebra, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
    a.bracket(u, v)
}

fn square(a: &BinaryAlgebra, m: &Matrix) -> Result<()> {
    let n = a.dim();
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: if m.rows() != n { m.rows() } else { m.cols() },
        });
    }
    Ok(())
}

fn columns(m: &Matrix) -> Vec<Vector> {
    (0..m.cols()).map(|c| m.column(c)).collect()
}

/// Checks `[α(x),[y,z]] + [α(y),[z,x]] + [α(z),[x,y]] = 0` on basis
/// triples `i ≤ j ≤ k`.
pub fn check_hom_jacobi(a: &BinaryAlgebra, alpha: &Matrix) -> Result<CheckReport> {
    square(a, alpha)?;
    let n = a.dim();
    let img = columns(alpha);
    let report = CheckReport::scan("hom-jacobi", sorted_triples(n), |t| {
        let (i, j, k) = (t[0], t[1], t[2]);
        let mut r = a.bracket(&img[i], &a.bracket_basis(j, k))?;
        let s = a.bracket(&img[j], &a.bracket_basis(k, i))?;
        let u = a.bracket(&img[k], &a.bracket_basis(i, j))?;
        for ((x, y), z) in r.iter_mut().zip(&s).zip(&u) {
            *x += y;
            *x += z;
        }
        Ok(r)
    })?;
    Ok(report.with_assumptions(denominator_assumptions(
        a.all_scalars().chain(alpha.entries()),
    )))
}

/// Checks `τ([x_i, x_j]) = 0` for all `i < j`.
pub fn check_trace_function(a: &BinaryAlgebra, tau: &Covector) -> Result<CheckReport> {
    if tau.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: tau.dim(),
        });
    }
    let report = CheckReport::scan("trace", strict_pairs(a.dim()), |t| {
        Ok(vec![tau.apply(a.structure_constants(t[0], t[1]))?])
    })?;
    Ok(report.with_assumptions(denominator_assumptions(
        a.all_scalars().chain(tau.entries()),
    )))
}

/// Space of all trace functions, as covector coordinates.
pub fn trace_functions(a: &BinaryAlgebra) -> Result<Subspace> {
    let n = a.dim();
    let rows: Vec<Vector> = strict_pairs(n)
        .map(|t| a.structure_constants(t[0], t[1]).clone())
        .collect();
    if rows.is_empty() {
        return Ok(Subspace::full(n));
    }
    nullspace(&Matrix::from_rows(rows)?)
}

/// Checks `ρ([x_i, x_j]) = [ρ(x_i), ρ(x_j)]` for all `i < j`.
pub fn check_binary_endomorphism(a: &BinaryAlgebra, rho: &Matrix) -> Result<CheckReport> {
    square(a, rho)?;
    let img = columns(rho);
    let report = CheckReport::scan("endomorphism", strict_pairs(a.dim()), |t| {
        let lhs = rho.apply(a.structure_constants(t[0], t[1]))?;
        let rhs = a.bracket(&img[t[0]], &img[t[1]])?;
        Ok(vec_sub(&lhs, &rhs))
    })?;
    Ok(report.with_assumptions(denominator_assumptions(
        a.all_scalars().chain(rho.entries()),
    )))
}

/// True when `[s, V] ⊆ s`.
pub fn is_ideal(a: &BinaryAlgebra, s: &Subspace) -> Result<bool> {
    let n = a.dim();
    if s.ambient_dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: s.ambient_dim(),
        });
    }
    for b in s.basis() {
        for j in 0..n {
            if !s.contains(&a.bracket(b, &basis_vector(n, j))?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
