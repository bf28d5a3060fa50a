//! Finite-dimensional modules given by one action matrix per basis element.

use std::fmt;

use num_traits::One;

use crate::algebra::{LieAlgebra, LieError};
use crate::linalg::{Rational, SparseMatrix, SparseVec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepViolation {
    pub pair: (usize, usize),
    pub labels: (String, String),
    /// `ρ([b_i,b_j]) - [ρ(b_i), ρ(b_j)]`
    pub residual: SparseMatrix,
}

impl fmt::Display for RepViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "homomorphism law fails on ({}, {}): {} nonzero residual entries",
            self.labels.0,
            self.labels.1,
            self.residual.nnz()
        )
    }
}

/// A g-module: `actions[i]` is the matrix of `b_i` acting on `Q^module_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: LieAlgebra,
    module_dim: usize,
    actions: Vec<SparseMatrix>,
}

impl Representation {
    pub fn new(algebra: LieAlgebra, module_dim: usize, actions: Vec<SparseMatrix>) -> Result<Self, LieError> {
        if actions.len() != algebra.dim() {
            return Err(LieError::ActionCount { expected: algebra.dim(), found: actions.len() });
        }
        for a in &actions {
            if a.rows() != module_dim || a.cols() != module_dim {
                return Err(LieError::DimensionMismatch { expected: module_dim, found: a.rows().max(a.cols()) });
            }
        }
        Ok(Self { algebra, module_dim, actions })
    }

    pub fn trivial(algebra: &LieAlgebra, module_dim: usize) -> Self {
        let actions = vec![SparseMatrix::zeros(module_dim, module_dim); algebra.dim()];
        Self { algebra: algebra.clone(), module_dim, actions }
    }

    pub fn adjoint(algebra: &LieAlgebra) -> Self {
        let actions = (0..algebra.dim()).map(|i| algebra.ad_matrix(i)).collect();
        Self { algebra: algebra.clone(), module_dim: algebra.dim(), actions }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn action(&self, i: usize) -> &SparseMatrix {
        &self.actions[i]
    }

    pub fn actions(&self) -> &[SparseMatrix] {
        &self.actions
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn action_of(&self, v: &SparseVec) -> SparseMatrix {
        let mut m = SparseMatrix::zeros(self.module_dim, self.module_dim);
        for (i, c) in v.iter() {
            m.axpy(c, &self.actions[i]);
        }
        m
    }

    pub fn is_trivial(&self) -> bool {
        self.actions.iter().all(SparseMatrix::is_zero)
    }

    /// Checks `ρ([b_i,b_j]) = ρ(b_i)ρ(b_j) - ρ(b_j)ρ(b_i)` for all `i < j`.
    pub fn validate(&self) -> Result<(), RepViolation> {
        let n = self.algebra.dim();
        for i in 0..n {
            for j in i + 1..n {
                let mut residual = self.action_of(&self.algebra.bracket_basis(i, j));
                residual.axpy(&-Rational::one(), &self.actions[i].commutator(&self.actions[j]));
                if !residual.is_zero() {
                    return Err(RepViolation {
                        pair: (i, j),
                        labels: (self.algebra.label(i).to_string(), self.algebra.label(j).to_string()),
                        residual,
                    });
                }
            }
        }
        Ok(())
    }

    /// Restriction to the coordinate subalgebra spanned by `indices`, which
    /// become basis elements `0..indices.len()` in the given order.
    pub fn restrict(&self, indices: &[usize]) -> Result<Representation, LieError> {
        let sub = self.algebra.subalgebra(indices)?;
        let actions = indices.iter().map(|&i| self.actions[i].clone()).collect();
        Ok(Representation { algebra: sub, module_dim: self.module_dim, actions })
    }

    /// Same module viewed through a relabelled copy of the algebra (used for
    /// basis permutation checks).
    pub fn with_algebra(&self, algebra: LieAlgebra) -> Result<Representation, LieError> {
        Representation::new(algebra, self.module_dim, self.actions.clone())
    }
}
