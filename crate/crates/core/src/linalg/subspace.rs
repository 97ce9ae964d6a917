use super::elim::{row_reduce, Echelon};
use super::matrix::{zero_vector, Covector, Matrix, Vector};
use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// Linear subspace of coordinate space.
///
/// Each basis vector carries a one at its own marker coordinate where all
/// other basis vectors vanish. Spans are stored in reduced row echelon
/// form; kernels with parametric entries keep their free-variable basis so
/// no further pivot assumptions are introduced.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivot_cols: Vec<usize>,
    /// Expressions assumed nonzero while computing this subspace.
    pub assumptions: Vec<Scalar>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.dim() == other.dim()
            && other
                .basis
                .iter()
                .all(|b| self.contains(b).unwrap_or(false))
    }
}

impl Subspace {
    pub fn span(ambient_dim: usize, vectors: Vec<Vector>) -> Result<Subspace> {
        let Echelon {
            rows,
            pivot_cols,
            assumptions,
        } = row_reduce(vectors, ambient_dim)?;
        Ok(Subspace {
            ambient_dim,
            basis: rows,
            pivot_cols,
            assumptions,
        })
    }

    pub fn zero(ambient_dim: usize) -> Subspace {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivot_cols: Vec::new(),
            assumptions: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Subspace {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim)
                .map(|i| super::matrix::basis_vector(ambient_dim, i))
                .collect(),
            pivot_cols: (0..ambient_dim).collect(),
            assumptions: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    /// Exact membership test by reduction against the echelon basis.
    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        let mut rem: Vector = v.to_vec();
        for (row, &pc) in self.basis.iter().zip(&self.pivot_cols) {
            let k = rem[pc].clone();
            if k.is_zero() {
                continue;
            }
            for (x, b) in rem.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &k.mul(b);
                }
            }
        }
        Ok(rem.iter().all(Scalar::is_zero))
    }
}

pub fn subspace_contains(s: &Subspace, v: &[Scalar]) -> Result<bool> {
    s.contains(v)
}

fn kernel_from_echelon(e: &Echelon, width: usize) -> Result<Subspace> {
    let free: Vec<usize> = (0..width).filter(|c| !e.pivot_cols.contains(c)).collect();
    let vectors = free
        .iter()
        .map(|&f| {
            let mut v = zero_vector(width);
            v[f] = Scalar::one();
            for (row, &pc) in e.rows.iter().zip(&e.pivot_cols) {
                v[pc] = row[f].neg();
            }
            v
        })
        .collect::<Vec<Vector>>();
    let mut s = if vectors.iter().flatten().all(Scalar::is_constant) {
        Subspace::span(width, vectors)?
    } else {
        Subspace {
            ambient_dim: width,
            basis: vectors,
            pivot_cols: free,
            assumptions: Vec::new(),
        }
    };
    for a in &e.assumptions {
        super::elim::push_assumption(&mut s.assumptions, a);
    }
    Ok(s)
}

/// Kernel of a matrix.
pub fn nullspace(m: &Matrix) -> Result<Subspace> {
    let e = row_reduce(m.row_vectors(), m.cols())?;
    kernel_from_echelon(&e, m.cols())
}

/// Kernel of a functional.
pub fn kernel(f: &Covector) -> Result<Subspace> {
    nullspace(&f.as_matrix())
}

/// Solution set of a linear system.
#[derive(Clone, Debug, PartialEq)]
pub enum LinearSolution {
    /// All right-hand sides were zero.
    Homogeneous(Subspace),
    Affine {
        particular: Vector,
        kernel: Subspace,
    },
    Inconsistent,
}

/// Solves the rows `coeffs · x = rhs` over `width` unknowns.
pub fn solve_linear(constraints: &[(Vector, Scalar)], width: usize) -> Result<LinearSolution> {
    for (row, _) in constraints {
        if row.len() != width {
            return Err(Error::DimensionMismatch {
                expected: width,
                found: row.len(),
            });
        }
    }
    let homogeneous = constraints.iter().all(|(_, b)| b.is_zero());
    if homogeneous {
        let rows = constraints.iter().map(|(r, _)| r.clone()).collect();
        let e = row_reduce(rows, width)?;
        return Ok(LinearSolution::Homogeneous(kernel_from_echelon(&e, width)?));
    }
    let aug: Vec<Vector> = constraints
        .iter()
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let e = row_reduce(aug, width + 1)?;
    if e.pivot_cols.last() == Some(&width) {
        return Ok(LinearSolution::Inconsistent);
    }
    let mut particular = zero_vector(width);
    for (row, &pc) in e.rows.iter().zip(&e.pivot_cols) {
        particular[pc] = row[width].clone();
    }
    let coeff_rows = e.rows.iter().map(|r| r[..width].to_vec()).collect();
    let ce = Echelon {
        rows: coeff_rows,
        pivot_cols: e.pivot_cols.clone(),
        assumptions: e.assumptions.clone(),
    };
    Ok(LinearSolution::Affine {
        particular,
        kernel: kernel_from_echelon(&ce, width)?,
    })
}
