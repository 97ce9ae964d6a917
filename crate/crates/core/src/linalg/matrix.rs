use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// Coordinate vector on a basis.
pub type Vector = Vec<Scalar>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn basis_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn vec_scale(k: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| k.mul(x)).collect()
}

/// `acc += k * v`, skipping zero work.
pub fn axpy(acc: &mut [Scalar], k: &Scalar, v: &[Scalar]) {
    if k.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &k.mul(x);
        }
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Dense matrix in row-major order. As a linear map, column `j` holds the
/// image of basis vector `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        check_dim(rows * cols, entries.len())?;
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::scalar(n, Scalar::one())
    }

    /// `k` times the identity.
    pub fn scalar(n: usize, k: Scalar) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, k.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * ncols);
        for r in rows {
            check_dim(ncols, r.len())?;
            entries.extend(r);
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            entries,
        })
    }

    /// Builds a square matrix whose column `j` is `columns[j]`.
    pub fn from_columns(columns: &[Vector]) -> Result<Self> {
        let n = columns.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(n, columns.len());
        for (j, col) in columns.iter().enumerate() {
            check_dim(n, col.len())?;
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> Vector {
        self.entries[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        check_dim(self.cols, v.len())?;
        let mut out = zero_vector(self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let m = self.get(r, c);
                if !m.is_zero() {
                    *o += &m.mul(x);
                }
            }
        }
        Ok(out)
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &Matrix) -> Result<Matrix> {
        check_dim(self.cols, other.rows)?;
        let mut out = Matrix::zeros(self.rows, other.cols);
        for c in 0..other.cols {
            let col = self.apply(&other.column(c))?;
            for (r, x) in col.into_iter().enumerate() {
                out.set(r, c, x);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| k.mul(x)).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        check_dim(self.rows, other.rows)?;
        check_dim(self.cols, other.cols)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: vec_sub(&self.entries, &other.entries),
        })
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.entries)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let x = self.get(r, c);
                    if r == c {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// Row-major flattening, entry `(r, c)` at index `r * cols + c`.
    pub fn vectorize(&self) -> Vector {
        self.entries.clone()
    }

    pub fn from_vectorized(rows: usize, cols: usize, v: Vector) -> Result<Matrix> {
        Matrix::new(rows, cols, v)
    }

    pub fn map_entries<F>(&self, f: F) -> Result<Matrix>
    where
        F: FnMut(&Scalar) -> Result<Scalar>,
    {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect::<Result<_>>()?,
        })
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Linear functional given by its values on the basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Covector {
    entries: Vec<Scalar>,
}

impl Covector {
    pub fn new(entries: Vec<Scalar>) -> Self {
        Covector { entries }
    }

    pub fn zeros(n: usize) -> Self {
        Covector {
            entries: zero_vector(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Scalar> {
        check_dim(self.dim(), v.len())?;
        let mut acc = Scalar::zero();
        for (t, x) in self.entries.iter().zip(v) {
            if !t.is_zero() && !x.is_zero() {
                acc += &t.mul(x);
            }
        }
        Ok(acc)
    }

    /// The functional `self ∘ m`.
    pub fn compose(&self, m: &Matrix) -> Result<Covector> {
        check_dim(self.dim(), m.rows())?;
        (0..m.cols())
            .map(|c| self.apply(&m.column(c)))
            .collect::<Result<Vec<_>>>()
            .map(Covector::new)
    }

    pub fn scale(&self, k: &Scalar) -> Covector {
        Covector::new(vec_scale(k, &self.entries))
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.entries)
    }

    pub fn as_matrix(&self) -> Matrix {
        Matrix {
            rows: 1,
            cols: self.dim(),
            entries: self.entries.clone(),
        }
    }
}

/// Matrix-vector product.
pub fn mat_apply(m: &Matrix, v: &[Scalar]) -> Result<Vector> {
    m.apply(v)
}
