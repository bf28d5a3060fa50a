//! Exact Chevalley–Eilenberg cohomology of finite-dimensional Lie algebras.
//!
//! All arithmetic is over the rationals. The crate covers structure-constant
//! algebras ([`algebra`]), modules ([`representation`]), cochain complexes
//! ([`cochain`]), invariants under a Levi factor ([`invariants`]), central
//! extensions and the Hochschild–Serre dimension check ([`factorization`]),
//! and named algebras such as the Schrödinger algebras ([`catalog`]).

pub mod algebra;
pub mod catalog;
pub mod cochain;
pub mod factorization;
pub mod invariants;
pub mod linalg;
pub mod representation;

pub use algebra::{JacobiViolation, LieAlgebra, LieError};
pub use cochain::{cohomology, cohomology_dims, differential, CochainSpace, CohomologyDims, CohomologyResult};
pub use invariants::InvariantSetup;
pub use linalg::{Rational, SparseMatrix, SparseVec, Subspace};
pub use representation::Representation;
