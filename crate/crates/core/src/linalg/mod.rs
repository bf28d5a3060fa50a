//! Exact linear algebra over the rationals.
//!
//! Everything downstream (cocycle spaces, centers, derivation algebras,
//! invariant subspaces) reduces to ranks, kernels and intersections of
//! sparse rational matrices. The sparse elimination lives in [`echelon`];
//! [`dense`] is an independent textbook Gaussian elimination used as a
//! cross-check oracle.

pub mod dense;
mod echelon;
mod rational;
mod sparse;
mod subspace;

pub use echelon::{kernel_basis, rank, Echelon};
pub use rational::{int, parse_rational, ratio, serde_rational, Rational};
pub use sparse::{SparseMatrix, SparseVec};
pub use subspace::Subspace;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),
}
