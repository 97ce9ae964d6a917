//! Exact workbench for ternary Hom-Nambu-Lie algebras induced by Hom-Lie
//! algebras through a trace function.
//!
//! All arithmetic is exact: scalars are rational functions in named
//! parameters, and every identity is verified by expanding it on basis
//! tuples and testing each residual for exact vanishing.

pub mod algebras;
pub mod cli;
pub mod compat;
pub mod error;
pub mod jacobian;
pub mod linalg;
pub mod report;
pub mod scalars;
pub mod ternary;

pub use error::{Error, Result};
