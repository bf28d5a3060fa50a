//! The action of a Levi factor `s` on cochains of an ideal `r`, and the
//! `s`-invariant part of `H^n(r, M)`.
//!
//! For `v ∈ s` and `ω ∈ C^n(r, M)`:
//!
//! ```text
//! (v.ω)(e_1..e_n) = v.ω(e_1..e_n) - Σ_i ω(e_1, .., [v, e_i], .., e_n)
//! ```
//!
//! The invariant cohomology is `(Z^n ∩ Inv) / (B^n ∩ Inv)`, counting
//! invariant cocycles modulo invariant coboundaries.

use thiserror::Error;

use crate::algebra::{LieAlgebra, LieError};
use crate::cochain::{
    assemble_differential, coboundaries, cocycles, sort_with_sign, CochainError, CochainSpace, CohomologyDims,
    CohomologyResult,
};
use crate::linalg::{dense, kernel_basis, rank, Rational, SparseMatrix, SparseVec, Subspace};
use crate::representation::{RepViolation, Representation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("levi and radical indices must partition the basis of {0}")]
    NotADirectSplit(String),
    #[error("radical is not an ideal: [{0}, {1}] leaves it")]
    RadicalNotIdeal(String, String),
    #[error("element is not in the span of the levi factor")]
    NotInLevi,
    #[error("invalid module: {0}")]
    InvalidModule(RepViolation),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Cochain(#[from] CochainError),
}

/// `g = s ⊕ r` with `s` a coordinate subalgebra, `r` a coordinate ideal,
/// and a `g`-module `M`.
#[derive(Clone, Debug)]
pub struct InvariantSetup {
    module: Representation,
    levi: Vec<usize>,
    radical: Vec<usize>,
    levi_algebra: LieAlgebra,
    radical_rep: Representation,
    /// ambient index -> radical index
    radical_position: Vec<Option<usize>>,
}

impl InvariantSetup {
    pub fn new(module: Representation, levi: Vec<usize>, radical: Vec<usize>) -> Result<Self, InvariantError> {
        let g = module.algebra();
        let n = g.dim();
        let mut seen = vec![0u8; n];
        for &i in levi.iter().chain(&radical) {
            if i >= n {
                return Err(LieError::IndexOutOfRange { index: i, dim: n }.into());
            }
            seen[i] += 1;
        }
        if seen.iter().any(|&c| c != 1) {
            return Err(InvariantError::NotADirectSplit(g.name().to_string()));
        }
        module.validate().map_err(InvariantError::InvalidModule)?;
        let levi_algebra = g.subalgebra(&levi)?;
        let mut radical_position = vec![None; n];
        for (t, &i) in radical.iter().enumerate() {
            radical_position[i] = Some(t);
        }
        for a in 0..n {
            for &b in &radical {
                if g.bracket_basis(a, b).iter().any(|(k, _)| radical_position[k].is_none()) {
                    return Err(InvariantError::RadicalNotIdeal(g.label(a).to_string(), g.label(b).to_string()));
                }
            }
        }
        let radical_rep = module.restrict(&radical)?;
        Ok(Self { module, levi, radical, levi_algebra, radical_rep, radical_position })
    }

    /// Adjoint coefficients with the given split.
    pub fn adjoint(g: &LieAlgebra, levi: Vec<usize>, radical: Vec<usize>) -> Result<Self, InvariantError> {
        Self::new(Representation::adjoint(g), levi, radical)
    }

    pub fn ambient(&self) -> &LieAlgebra {
        self.module.algebra()
    }

    pub fn module(&self) -> &Representation {
        &self.module
    }

    pub fn levi(&self) -> &[usize] {
        &self.levi
    }

    pub fn radical(&self) -> &[usize] {
        &self.radical
    }

    pub fn levi_algebra(&self) -> &LieAlgebra {
        &self.levi_algebra
    }

    /// The module restricted to `r`; cochains `C^n(r, M)` are built on it.
    pub fn radical_rep(&self) -> &Representation {
        &self.radical_rep
    }

    pub fn cochain_space(&self, n: usize) -> CochainSpace {
        CochainSpace::for_rep(&self.radical_rep, n)
    }

    /// Matrix of `ω ↦ v.ω` on `C^n(r, M)`; `v` in ambient coordinates.
    pub fn cochain_action(&self, v: &SparseVec, n: usize) -> Result<SparseMatrix, InvariantError> {
        let g = self.ambient();
        if v.support_bound() > g.dim() || v.iter().any(|(i, _)| !self.levi.contains(&i)) {
            return Err(InvariantError::NotInLevi);
        }
        let space = self.cochain_space(n);
        let md = space.module_dim();
        let rho_v = self.module.action_of(v);
        // [v, e_k] for each radical basis element, in radical coordinates
        let moved: Vec<SparseVec> = self
            .radical
            .iter()
            .map(|&b| {
                g.bracket_sparse(v, &SparseVec::unit(b))
                    .reindex(|k| self.radical_position[k].expect("radical is an ideal"))
            })
            .collect();
        let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); space.dim()];
        for (ti, t) in space.tuples().iter().enumerate() {
            for (mo, mi, val) in rho_v.entries() {
                rows[space.coordinate(ti, mo)].push((space.coordinate(ti, mi), val.clone()));
            }
            for (pos, &arg) in t.iter().enumerate() {
                for (k, c) in moved[arg].iter() {
                    let mut args = t.clone();
                    args[pos] = k;
                    let Some(s) = sort_with_sign(&mut args) else { continue };
                    let col = space.tuple_index(&args).expect("sorted tuple");
                    let coef = -(c * Rational::from_integer(s.into()));
                    for m in 0..md {
                        rows[space.coordinate(ti, m)].push((space.coordinate(col, m), coef.clone()));
                    }
                }
            }
        }
        Ok(SparseMatrix::from_rows(space.dim(), rows.into_iter().map(SparseVec::from_pairs).collect()))
    }

    /// Action matrices of the levi basis elements, in levi order.
    pub fn levi_actions(&self, n: usize) -> Vec<SparseMatrix> {
        self.levi
            .iter()
            .map(|&i| self.cochain_action(&SparseVec::unit(i), n).expect("levi basis element"))
            .collect()
    }

    /// `C^n(r, M)^s`: common kernel of the levi actions.
    pub fn invariant_subspace(&self, n: usize) -> Subspace {
        let dim = self.cochain_space(n).dim();
        let actions = self.levi_actions(n);
        let refs: Vec<&SparseMatrix> = actions.iter().collect();
        kernel_basis(&SparseMatrix::vstack(dim, &refs))
    }

    /// `(Z^n ∩ Inv) / (B^n ∩ Inv)` with representatives.
    pub fn invariant_cohomology(&self, n: usize) -> Result<CohomologyResult, InvariantError> {
        let inv = self.invariant_subspace(n);
        let z = cocycles(&self.radical_rep, n)?.intersect(&inv).expect("same ambient");
        let b = coboundaries(&self.radical_rep, n)?.intersect(&inv).expect("same ambient");
        Ok(CohomologyResult::from_spaces(n, inv.ambient_dim(), &z, &b))
    }

    /// `(dim Z^n ∩ Inv, dim B^n ∩ Inv)` from dense ranks alone:
    /// `Z ∩ Inv = ker [d_n; A]` and `dim B ∩ Inv = rank d_{n-1} - rank A d_{n-1}`,
    /// where `A` stacks the levi actions.
    pub fn dense_counts(&self, n: usize) -> (usize, usize) {
        let dim = self.cochain_space(n).dim();
        let actions = self.levi_actions(n);
        let refs: Vec<&SparseMatrix> = actions.iter().collect();
        let a = SparseMatrix::vstack(dim, &refs);
        let dn = assemble_differential(&self.radical_rep, n);
        let z = dim - dense::rank_of(&SparseMatrix::vstack(dim, &[&dn, &a]));
        let b = if n == 0 {
            0
        } else {
            let prev = assemble_differential(&self.radical_rep, n - 1);
            dense::rank_of(&prev) - dense::rank_of(&(&a * &prev))
        };
        (z, b)
    }

    /// Cohomology of the invariant subcomplex `(Inv^•, d)`. Agrees with
    /// [`Self::invariant_cohomology`] whenever `s` acts completely reducibly.
    pub fn invariant_subcomplex_dims(&self, n: usize) -> CohomologyDims {
        let inv = self.invariant_subspace(n);
        let basis_columns = |s: &Subspace| SparseMatrix::from_rows(s.ambient_dim(), s.basis().to_vec()).transpose();
        let dn = assemble_differential(&self.radical_rep, n);
        let z = inv.dim() - rank(&(&dn * &basis_columns(&inv)));
        let b = if n == 0 {
            0
        } else {
            let prev = self.invariant_subspace(n - 1);
            rank(&(&assemble_differential(&self.radical_rep, n - 1) * &basis_columns(&prev)))
        };
        CohomologyDims::new(n, inv.ambient_dim(), z, b)
    }
}
