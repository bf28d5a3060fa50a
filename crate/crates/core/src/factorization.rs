//! Central extensions by trivial-coefficient 2-cocycles, and the
//! dimension-level Hochschild–Serre check
//! `dim H^p(g, M) = Σ_{m+n=p} dim H^m(s, Q) · dim H^n(r, M)^s`.

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{JacobiViolation, LieAlgebra, LieError};
use crate::cochain::{cohomology_dims, CochainError, CochainSpace};
use crate::invariants::{InvariantError, InvariantSetup};
use crate::linalg::SparseVec;
use crate::representation::Representation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FactorizationError {
    #[error("not a 2-cocycle: {0}")]
    NotACocycle(JacobiViolation),
    #[error("cochain does not fit C^2 of a {dim}-dimensional algebra with {k} central directions")]
    CochainShape { dim: usize, k: usize },
    #[error("degree {0} exceeds the supported maximum of 3")]
    DegreeTooLarge(usize),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Cochain(#[from] CochainError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

/// Default names for the central generators, avoiding clashes with `base`.
pub fn central_labels(base: &LieAlgebra, k: usize) -> Vec<String> {
    (1..=k)
        .map(|i| {
            let mut label = format!("c{i}");
            while base.index_of(&label).is_some() {
                label.push('\'');
            }
            label
        })
        .collect()
}

/// `g ⊕ Q^k` with `[x + a, y + b] = [x, y] + φ(x, y)`, where `φ` is a
/// cochain in `C^2(g, Q^k)` (trivial coefficients).
pub fn central_extension(base: &LieAlgebra, cocycle: &SparseVec, k: usize) -> Result<LieAlgebra, FactorizationError> {
    central_extension_labeled(base, cocycle, central_labels(base, k))
}

pub fn central_extension_labeled(
    base: &LieAlgebra,
    cocycle: &SparseVec,
    central: Vec<String>,
) -> Result<LieAlgebra, FactorizationError> {
    let n = base.dim();
    let k = central.len();
    let space = CochainSpace::new(n, k, 2);
    if space.check(cocycle).is_err() {
        return Err(FactorizationError::CochainShape { dim: n, k });
    }
    let mut brackets = Vec::new();
    for (t, pair) in space.tuples().iter().enumerate() {
        let mut v = base.bracket_basis(pair[0], pair[1]);
        for m in 0..k {
            v.add_at(n + m, cocycle.get(space.coordinate(t, m)));
        }
        brackets.push((pair[0], pair[1], v));
    }
    let labels = base.labels().iter().cloned().chain(central).collect();
    let g = LieAlgebra::new(format!("{}~ext", base.name()), labels, brackets)?;
    g.validate().map_err(FactorizationError::NotACocycle)?;
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HsTerm {
    /// degree `m` on the levi side
    pub levi_degree: usize,
    pub levi_dim: usize,
    /// `dim H^{p-m}(r, M)^s`
    pub invariant_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HsReport {
    pub degree: usize,
    pub direct: usize,
    pub factorized: usize,
    pub agree: bool,
    pub terms: Vec<HsTerm>,
}

fn hs_terms(setup: &InvariantSetup, p: usize) -> Result<Vec<HsTerm>, FactorizationError> {
    if p > 3 {
        return Err(FactorizationError::DegreeTooLarge(p));
    }
    let levi_trivial = Representation::trivial(setup.levi_algebra(), 1);
    (0..=p)
        .map(|m| {
            Ok(HsTerm {
                levi_degree: m,
                levi_dim: cohomology_dims(&levi_trivial, m)?.dim_cohomology,
                invariant_dim: setup.invariant_cohomology(p - m)?.dim_cohomology,
            })
        })
        .collect()
}

/// `Σ_{m+n=p} dim H^m(s, Q) · dim H^n(r, M)^s`, for `p ≤ 3`.
pub fn hs_factorized_dim(setup: &InvariantSetup, p: usize) -> Result<usize, FactorizationError> {
    Ok(hs_terms(setup, p)?.iter().map(|t| t.levi_dim * t.invariant_dim).sum())
}

/// Compares the factorized count with `dim H^p(g, M)` from the full complex.
pub fn hs_crosscheck(setup: &InvariantSetup, p: usize) -> Result<HsReport, FactorizationError> {
    let terms = hs_terms(setup, p)?;
    let factorized = terms.iter().map(|t| t.levi_dim * t.invariant_dim).sum();
    let direct = cohomology_dims(setup.module(), p)?.dim_cohomology;
    Ok(HsReport { degree: p, direct, factorized, agree: direct == factorized, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::int;

    #[test]
    fn zero_cocycle_gives_direct_sum() {
        let g = catalog::sl2();
        let ext = central_extension(&g, &SparseVec::new(), 2).unwrap();
        assert_eq!(ext.dim(), 5);
        assert_eq!(ext.labels()[3..], ["c1", "c2"]);
        assert_eq!(ext.center().dim(), 2);
        assert_eq!(ext.structure().count(), g.structure().count());
    }

    #[test]
    fn symplectic_form_gives_heisenberg() {
        for n in 1..=3 {
            let a = catalog::abelian_xy(n);
            let space = CochainSpace::new(2 * n, 1, 2);
            let phi = space.cochain((0..n).map(|i| ([i, n + i], 0, int(1)))).unwrap();
            let ext = central_extension_labeled(&a, &phi, vec!["z".into()]).unwrap();
            let h = catalog::heisenberg(n);
            assert_eq!(ext.labels(), h.labels());
            assert_eq!(ext.structure().collect::<Vec<_>>(), h.structure().collect::<Vec<_>>());
        }
    }

    #[test]
    fn non_cocycle_is_rejected() {
        // φ(h, x1) = 1 alone: dφ(e, f, x1) picks up φ([e, f], x1) = 1
        let g = catalog::schrodinger(1);
        let space = CochainSpace::new(g.dim(), 1, 2);
        let phi = space.cochain([([2, 3], 0, int(1))]).unwrap();
        assert!(matches!(central_extension(&g, &phi, 1), Err(FactorizationError::NotACocycle(_))));
        assert!(matches!(
            central_extension(&g, &SparseVec::unit(400), 1),
            Err(FactorizationError::CochainShape { .. })
        ));
    }

    #[test]
    fn degree_cap() {
        let g = catalog::schrodinger(1);
        let setup = InvariantSetup::adjoint(&g, vec![0, 1, 2], vec![3, 4, 5]).unwrap();
        assert_eq!(hs_factorized_dim(&setup, 4), Err(FactorizationError::DegreeTooLarge(4)));
    }

    #[test]
    fn degree_zero_is_the_center() {
        let g = catalog::schrodinger(3);
        let setup = InvariantSetup::adjoint(&g, vec![0, 1, 2], (3..10).collect()).unwrap();
        assert_eq!(hs_factorized_dim(&setup, 0).unwrap(), 1);
    }
}
