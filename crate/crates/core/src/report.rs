use std::fmt;

use crate::error::Result;
use crate::linalg::{is_zero_vector, Vector};
use crate::scalars::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
        })
    }
}

/// Outcome of an exhaustive identity check.
///
/// A failing report always carries the lexicographically first basis tuple
/// with a nonzero residual, and that residual.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub check: String,
    pub verdict: Verdict,
    pub witness: Option<Vec<usize>>,
    pub residual: Option<Vector>,
    /// Which sub-condition produced the witness, when a check has several.
    pub condition: Option<String>,
    /// Non-constant expressions assumed nonzero (denominators, pivots).
    pub assumptions: Vec<Scalar>,
}

impl CheckReport {
    pub fn holds(check: &str) -> Self {
        CheckReport {
            check: check.to_string(),
            verdict: Verdict::Holds,
            witness: None,
            residual: None,
            condition: None,
            assumptions: Vec::new(),
        }
    }

    pub fn fails(check: &str, witness: Vec<usize>, residual: Vector) -> Self {
        debug_assert!(!is_zero_vector(&residual));
        CheckReport {
            check: check.to_string(),
            verdict: Verdict::Fails,
            witness: Some(witness),
            residual: Some(residual),
            condition: None,
            assumptions: Vec::new(),
        }
    }

    pub fn holds_ok(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn with_condition(mut self, condition: &str) -> Self {
        self.condition = Some(condition.to_string());
        self
    }

    pub fn with_assumptions(mut self, assumptions: Vec<Scalar>) -> Self {
        for a in assumptions {
            crate::linalg::push_assumption(&mut self.assumptions, &a);
        }
        self
    }

    /// Scans `tuples` in order and reports the first nonzero residual.
    pub(crate) fn scan<I, F>(check: &str, tuples: I, mut residual: F) -> Result<CheckReport>
    where
        I: IntoIterator<Item = Vec<usize>>,
        F: FnMut(&[usize]) -> Result<Vector>,
    {
        for t in tuples {
            let r = residual(&t)?;
            if !is_zero_vector(&r) {
                return Ok(CheckReport::fails(check, t, r));
            }
        }
        Ok(CheckReport::holds(check))
    }
}

/// Non-constant denominators among `values`: the genericity conditions
/// under which a symbolic verdict is meaningful.
pub fn denominator_assumptions<'a, I>(values: I) -> Vec<Scalar>
where
    I: IntoIterator<Item = &'a Scalar>,
{
    let mut out = Vec::new();
    for v in values {
        if let Some(d) = v.parametric_denominator() {
            if !d.is_constant() {
                crate::linalg::push_assumption(&mut out, &Scalar::from_poly(d.clone()));
            }
        }
    }
    out
}

/// Index tuples `i ≤ j ≤ k` in lexicographic order.
pub(crate) fn sorted_triples(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).flat_map(move |i| (i..n).flat_map(move |j| (j..n).map(move |k| vec![i, j, k])))
}

/// Index tuples `i < j < k` in lexicographic order.
pub(crate) fn strict_triples(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).flat_map(move |i| {
        (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| vec![i, j, k]))
    })
}

/// Index pairs `i < j` in lexicographic order.
pub(crate) fn strict_pairs(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| vec![i, j]))
}

/// All index pairs in lexicographic order.
pub(crate) fn all_pairs(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).flat_map(move |i| (0..n).map(move |j| vec![i, j]))
}
