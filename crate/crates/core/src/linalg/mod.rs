//! Exact dense linear algebra over [`Scalar`](crate::scalars::Scalar).

mod elim;
mod matrix;
mod subspace;

pub use elim::{rank, row_reduce, Echelon};
pub(crate) use elim::push_assumption;
pub use matrix::{
    axpy, basis_vector, is_zero_vector, mat_apply, vec_add, vec_scale, vec_sub, zero_vector,
    Covector, Matrix, Vector,
};
pub use subspace::{kernel, nullspace, solve_linear, subspace_contains, LinearSolution, Subspace};
