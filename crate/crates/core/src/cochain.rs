//! Chevalley–Eilenberg cochains, differentials and cohomology.
//!
//! `C^n(r, M)` has basis pairs `(I, m)` where `I` runs over strictly
//! increasing `n`-tuples of basis indices of `r` in lexicographic order and
//! `m` over module basis indices; coordinate `tuple_index * dim M + m`.
//!
//! The differential is the standard one,
//!
//! ```text
//! (dφ)(e_0..e_n) = Σ_i (-1)^i e_i.φ(..ê_i..) + Σ_{i<j} (-1)^{i+j} φ([e_i,e_j], ..ê_i..ê_j..)
//! ```
//!
//! with `Z^n = ker d_n` and `B^n = im d_{n-1}`. For trivial coefficients in
//! degree 1 this is `(dω)(x, y) = -ω([x, y])`; the opposite global sign
//! convention gives the same cocycles and coboundaries.

use std::collections::HashMap;

use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{dense, kernel_basis, parse_rational, rank, LinalgError, Rational, SparseMatrix, SparseVec, Subspace};
use crate::representation::{RepViolation, Representation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CochainError {
    #[error("cochain has {found} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid representation: {0}")]
    InvalidRepresentation(RepViolation),
    #[error("bad cochain entry: {0}")]
    BadEntry(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Strictly increasing `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::with_capacity(binomial(n, k));
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Sorts in place; returns the permutation sign, or `None` on a repeat.
pub fn sort_with_sign(t: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..t.len() {
        let mut j = i;
        while j > 0 && t[j - 1] > t[j] {
            t.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if t.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

fn sign(parity: usize) -> Rational {
    if parity % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Coordinates of `C^n(r, M)` for `dim r = source_dim`, `dim M = module_dim`.
#[derive(Clone, Debug)]
pub struct CochainSpace {
    degree: usize,
    source_dim: usize,
    module_dim: usize,
    tuples: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl CochainSpace {
    pub fn new(source_dim: usize, module_dim: usize, degree: usize) -> Self {
        let tuples = combinations(source_dim, degree);
        let index = tuples.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        Self { degree, source_dim, module_dim, tuples, index }
    }

    pub fn for_rep(rep: &Representation, degree: usize) -> Self {
        Self::new(rep.algebra().dim(), rep.module_dim(), degree)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn dim(&self) -> usize {
        self.tuples.len() * self.module_dim
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    pub fn tuple_index(&self, sorted: &[usize]) -> Option<usize> {
        self.index.get(sorted).copied()
    }

    pub fn coordinate(&self, tuple_index: usize, m: usize) -> usize {
        tuple_index * self.module_dim + m
    }

    pub fn decode(&self, coordinate: usize) -> (&[usize], usize) {
        (&self.tuples[coordinate / self.module_dim], coordinate % self.module_dim)
    }

    /// Builds a cochain from values `φ(e_{t_1}, …, e_{t_n})_m = value` on
    /// possibly unsorted argument tuples; alternation fixes the sign.
    pub fn cochain<T: AsRef<[usize]>>(
        &self,
        terms: impl IntoIterator<Item = (T, usize, Rational)>,
    ) -> Result<SparseVec, CochainError> {
        let mut pairs = Vec::new();
        for (tuple, m, value) in terms {
            let mut t = tuple.as_ref().to_vec();
            let original = t.clone();
            let bad = || CochainError::BadEntry(format!("{original:?} -> {m}"));
            if t.len() != self.degree || m >= self.module_dim || t.iter().any(|&i| i >= self.source_dim) {
                return Err(bad());
            }
            let s = sort_with_sign(&mut t).ok_or_else(bad)?;
            let idx = self.tuple_index(&t).ok_or_else(bad)?;
            pairs.push((self.coordinate(idx, m), value * Rational::from_integer(s.into())));
        }
        Ok(SparseVec::from_pairs(pairs))
    }

    pub fn check(&self, phi: &SparseVec) -> Result<(), CochainError> {
        if phi.support_bound() > self.dim() {
            return Err(CochainError::DimensionMismatch { expected: self.dim(), found: phi.support_bound() });
        }
        Ok(())
    }

    /// Sparse JSON form `[[[i_1,…,i_n], m, "p/q"], …]`.
    pub fn to_json(&self, phi: &SparseVec) -> Vec<CochainEntry> {
        phi.iter()
            .map(|(c, v)| {
                let (t, m) = self.decode(c);
                CochainEntry(t.to_vec(), m, v.to_string())
            })
            .collect()
    }

    pub fn from_json(&self, entries: &[CochainEntry]) -> Result<SparseVec, CochainError> {
        let mut terms = Vec::with_capacity(entries.len());
        for CochainEntry(t, m, v) in entries {
            terms.push((t.clone(), *m, parse_rational(v)?));
        }
        self.cochain(terms)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainEntry(pub Vec<usize>, pub usize, pub String);

fn checked(rep: &Representation) -> Result<(), CochainError> {
    rep.validate().map_err(CochainError::InvalidRepresentation)
}

/// Matrix of `d_n : C^n(r, M) → C^{n+1}(r, M)`, where `r = rep.algebra()`.
pub fn differential(rep: &Representation, n: usize) -> Result<SparseMatrix, CochainError> {
    checked(rep)?;
    Ok(assemble_differential(rep, n))
}

pub(crate) fn assemble_differential(rep: &Representation, n: usize) -> SparseMatrix {
    let g = rep.algebra();
    let md = rep.module_dim();
    let source = CochainSpace::for_rep(rep, n);
    let target = CochainSpace::for_rep(rep, n + 1);
    let mut rows: Vec<SparseVec> = Vec::with_capacity(target.dim());
    for t in target.tuples() {
        let mut block: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); md];
        for i in 0..=n {
            let rest: Vec<usize> = t.iter().enumerate().filter(|&(p, _)| p != i).map(|(_, &x)| x).collect();
            let col = source.tuple_index(&rest).expect("sorted subtuple");
            let s = sign(i);
            for (mo, mi, v) in rep.action(t[i]).entries() {
                block[mo].push((source.coordinate(col, mi), &s * v));
            }
        }
        for i in 0..=n {
            for j in i + 1..=n {
                let br = g.bracket_basis(t[i], t[j]);
                if br.is_zero() {
                    continue;
                }
                let rest: Vec<usize> =
                    t.iter().enumerate().filter(|&(p, _)| p != i && p != j).map(|(_, &x)| x).collect();
                for (k, c) in br.iter() {
                    let mut args = Vec::with_capacity(n);
                    args.push(k);
                    args.extend_from_slice(&rest);
                    let Some(perm) = sort_with_sign(&mut args) else { continue };
                    let col = source.tuple_index(&args).expect("sorted tuple");
                    let coef = sign(i + j) * Rational::from_integer(perm.into()) * c;
                    for (m, row) in block.iter_mut().enumerate() {
                        row.push((source.coordinate(col, m), coef.clone()));
                    }
                }
            }
        }
        rows.extend(block.into_iter().map(SparseVec::from_pairs));
    }
    SparseMatrix::from_rows(source.dim(), rows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyDims {
    pub degree: usize,
    pub dim_cochain: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim_cohomology: usize,
}

impl CohomologyDims {
    pub fn new(degree: usize, dim_cochain: usize, dim_cocycles: usize, dim_coboundaries: usize) -> Self {
        assert!(dim_coboundaries <= dim_cocycles, "B^n larger than Z^n");
        Self { degree, dim_cochain, dim_cocycles, dim_coboundaries, dim_cohomology: dim_cocycles - dim_coboundaries }
    }
}

/// `Z^n / B^n` with cocycle representatives of a basis of the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyResult {
    pub degree: usize,
    pub dim_cochain: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim_cohomology: usize,
    pub representatives: Vec<SparseVec>,
}

impl CohomologyResult {
    /// Extends a basis of `boundaries` to one of `cocycles`; the added
    /// vectors are the representatives.
    pub fn from_spaces(degree: usize, dim_cochain: usize, cocycles: &Subspace, boundaries: &Subspace) -> Self {
        let representatives = cocycles.complement_of(boundaries).expect("same ambient space");
        let dims = CohomologyDims::new(degree, dim_cochain, cocycles.dim(), boundaries.dim());
        assert_eq!(dims.dim_cohomology, representatives.len(), "B^n not contained in Z^n");
        Self {
            degree,
            dim_cochain,
            dim_cocycles: dims.dim_cocycles,
            dim_coboundaries: dims.dim_coboundaries,
            dim_cohomology: dims.dim_cohomology,
            representatives,
        }
    }

    pub fn dims(&self) -> CohomologyDims {
        CohomologyDims::new(self.degree, self.dim_cochain, self.dim_cocycles, self.dim_coboundaries)
    }
}

pub fn cocycles(rep: &Representation, n: usize) -> Result<Subspace, CochainError> {
    Ok(kernel_basis(&differential(rep, n)?))
}

pub fn coboundaries(rep: &Representation, n: usize) -> Result<Subspace, CochainError> {
    checked(rep)?;
    let dim = CochainSpace::for_rep(rep, n).dim();
    if n == 0 {
        return Ok(Subspace::zero(dim));
    }
    let prev = assemble_differential(rep, n - 1).transpose();
    Ok(Subspace::span(dim, prev.into_row_vecs()))
}

/// Full cohomology in degree `n` with representatives.
pub fn cohomology(rep: &Representation, n: usize) -> Result<CohomologyResult, CochainError> {
    let z = cocycles(rep, n)?;
    let b = coboundaries(rep, n)?;
    Ok(CohomologyResult::from_spaces(n, CochainSpace::for_rep(rep, n).dim(), &z, &b))
}

/// Dimensions only, via ranks of `d_n` and `d_{n-1}`.
pub fn cohomology_dims(rep: &Representation, n: usize) -> Result<CohomologyDims, CochainError> {
    let dn = differential(rep, n)?;
    let z = dn.cols() - rank(&dn);
    let b = if n == 0 { 0 } else { rank(&assemble_differential(rep, n - 1)) };
    Ok(CohomologyDims::new(n, dn.cols(), z, b))
}

/// Same counts as [`cohomology_dims`] but with textbook dense elimination,
/// for cross-checking.
pub fn cohomology_dims_dense(rep: &Representation, n: usize) -> Result<CohomologyDims, CochainError> {
    let dn = differential(rep, n)?;
    let z = dn.cols() - dense::rank_of(&dn);
    let b = if n == 0 { 0 } else { dense::rank_of(&assemble_differential(rep, n - 1)) };
    Ok(CohomologyDims::new(n, dn.cols(), z, b))
}

pub fn is_cocycle(rep: &Representation, n: usize, phi: &SparseVec) -> Result<bool, CochainError> {
    CochainSpace::for_rep(rep, n).check(phi)?;
    Ok(differential(rep, n)?.mul_vec(phi).is_zero())
}

pub fn is_coboundary(rep: &Representation, n: usize, phi: &SparseVec) -> Result<bool, CochainError> {
    CochainSpace::for_rep(rep, n).check(phi)?;
    if phi.is_zero() {
        return Ok(true);
    }
    Ok(coboundaries(rep, n)?.contains_sparse(phi))
}

/// Value `φ(e_{args})` as a module vector, for arbitrary (unsorted,
/// possibly repeating) argument indices.
pub fn evaluate(space: &CochainSpace, phi: &SparseVec, args: &[usize]) -> SparseVec {
    let mut t = args.to_vec();
    let Some(s) = sort_with_sign(&mut t) else { return SparseVec::new() };
    let Some(idx) = space.tuple_index(&t) else { return SparseVec::new() };
    let lo = space.coordinate(idx, 0);
    let hi = lo + space.module_dim();
    let factor = Rational::from_integer(s.into());
    SparseVec::from_pairs(
        phi.iter().filter(|(c, _)| (lo..hi).contains(c)).map(|(c, v)| (c - lo, v * &factor)),
    )
}
