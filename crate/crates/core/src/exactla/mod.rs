//! Exact rational arithmetic and sparse linear algebra.
//!
//! Every structural question in the toolkit (derivations, prolongation
//! layers, centers, quotients) reduces to a nullspace or rank computation
//! over the rationals. Elimination runs on integer rows with content
//! normalization, so coefficient growth stays bounded in practice and no
//! fixed-width overflow is possible.

mod matrix;
mod poly;
mod rational;
mod vector;

pub use matrix::{
    nullspace, nullspace_from_rref, rank_of, reduce_mod, rref, solve, span_basis, Echelon,
    RationalMatrix, Rref,
};
pub use poly::Poly;
pub use rational::{abs_le, format_rational, parse_rational, rat, ratio, to_i64, Rational};
pub use vector::SparseVec;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("malformed rational {0:?}")]
    Parse(String),
}
