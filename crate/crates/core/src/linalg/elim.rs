//! Fraction-free elimination over [`Scalar`].
//!
//! Forward elimination follows Bareiss: every update is divided by the
//! previous pivot, which keeps polynomial entries polynomial. Back
//! substitution then normalizes pivots to one to reach reduced echelon form.
//! A pivot that is a non-constant expression is assumed generically
//! nonzero; such pivots are returned as assumptions.

use super::matrix::{is_zero_vector, Matrix, Vector};
use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// Reduced row echelon form of a row set.
#[derive(Clone, Debug)]
pub struct Echelon {
    /// Nonzero rows, pivot entries equal to one.
    pub rows: Vec<Vector>,
    pub pivot_cols: Vec<usize>,
    /// Non-constant pivots assumed nonzero.
    pub assumptions: Vec<Scalar>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

pub(crate) fn push_assumption(list: &mut Vec<Scalar>, s: &Scalar) {
    if s.is_constant() {
        return;
    }
    let cand = Scalar::from_poly(s.numerator());
    if !list.iter().any(|x| *x == cand || *x == cand.neg()) {
        list.push(cand);
    }
}

pub fn row_reduce(rows: Vec<Vector>, width: usize) -> Result<Echelon> {
    for r in &rows {
        if r.len() != width {
            return Err(Error::DimensionMismatch {
                expected: width,
                found: r.len(),
            });
        }
    }
    let mut a: Vec<Vector> = rows.into_iter().filter(|r| !is_zero_vector(r)).collect();
    let m = a.len();
    let mut prev = Scalar::one();
    let mut pivot_cols = Vec::new();
    let mut assumptions = Vec::new();
    let mut r = 0;
    for col in 0..width {
        if r == m {
            break;
        }
        let Some(p) = (r..m)
            .filter(|&i| !a[i][col].is_zero())
            .min_by_key(|&i| (a[i][col].weight(), i))
        else {
            continue;
        };
        a.swap(r, p);
        let piv = a[r][col].clone();
        push_assumption(&mut assumptions, &piv);
        let (head, tail) = a.split_at_mut(r + 1);
        let prow = &head[r];
        for row in tail.iter_mut() {
            let lead = row[col].clone();
            for j in col + 1..width {
                let x = &row[j];
                let t = if lead.is_zero() {
                    piv.mul(x)
                } else if x.is_zero() {
                    lead.mul(&prow[j]).neg()
                } else {
                    piv.mul(x).sub(&lead.mul(&prow[j]))
                };
                row[j] = if prev.is_one() || t.is_zero() {
                    t
                } else {
                    t.div(&prev)?
                };
            }
            row[col] = Scalar::zero();
        }
        prev = piv;
        pivot_cols.push(col);
        r += 1;
    }
    a.truncate(r);

    // Back substitution to reduced form.
    for i in (0..r).rev() {
        let pc = pivot_cols[i];
        let inv = a[i][pc].recip()?;
        if !inv.is_one() {
            for x in a[i].iter_mut().skip(pc) {
                if !x.is_zero() {
                    *x = x.mul(&inv);
                }
            }
        }
        let (head, tail) = a.split_at_mut(i);
        let prow = &tail[0];
        for row in head.iter_mut() {
            let k = row[pc].clone();
            if k.is_zero() {
                continue;
            }
            for j in pc..width {
                if !prow[j].is_zero() {
                    row[j] -= &k.mul(&prow[j]);
                }
            }
        }
    }
    Ok(Echelon {
        rows: a,
        pivot_cols,
        assumptions,
    })
}

pub fn rank(m: &Matrix) -> Result<usize> {
    Ok(row_reduce(m.row_vectors(), m.cols())?.rank())
}
