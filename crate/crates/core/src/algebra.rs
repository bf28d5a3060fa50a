//! Finite-dimensional Lie algebras given by structure constants.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{int, kernel_basis, Rational, SparseMatrix, SparseVec, Subspace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiViolation {
    /// Basis indices `i < j < k` of the first failing triple.
    pub triple: [usize; 3],
    pub labels: [String; 3],
    /// `[[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j]`
    pub residual: SparseVec,
    pub residual_text: String,
}

impl fmt::Display for JacobiViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.labels;
        write!(f, "Jacobi identity fails on ({a}, {b}, {c}): residual {}", self.residual_text)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("duplicate basis label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown basis label {0:?}")]
    UnknownLabel(String),
    #[error("bracket pair ({0}, {1}) is invalid or listed twice")]
    InvalidPair(usize, usize),
    #[error("{0}")]
    Jacobi(JacobiViolation),
    #[error("not an ideal: [{element}, ideal basis vector {ideal_vector}] leaves the subspace")]
    NotAnIdeal { element: String, ideal_vector: usize },
    #[error("not a subalgebra: [{0}, {1}] leaves the span")]
    NotASubalgebra(String, String),
    #[error("expected {expected} action matrices, found {found}")]
    ActionCount { expected: usize, found: usize },
    #[error("action of {generator} is not a derivation: Leibniz fails on ({left}, {right})")]
    ActionNotDerivation { generator: String, left: String, right: String },
    #[error("action is not a homomorphism: fails on ({0}, {1})")]
    ActionNotHomomorphism(String, String),
}

/// Lie algebra over Q with a fixed ordered basis. Structure constants are
/// stored only for `i < j`; the rest follows from antisymmetry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    labels: Vec<String>,
    structure: BTreeMap<(usize, usize), SparseVec>,
}

impl LieAlgebra {
    /// Builds an algebra from brackets `[b_i, b_j] = result`. Pairs may be
    /// given in either order; each unordered pair at most once. Jacobi is
    /// not checked here, see [`LieAlgebra::validate`].
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        brackets: impl IntoIterator<Item = (usize, usize, SparseVec)>,
    ) -> Result<Self, LieError> {
        let dim = labels.len();
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(LieError::DuplicateLabel(l.clone()));
            }
        }
        let mut structure = BTreeMap::new();
        for (i, j, result) in brackets {
            for index in [i, j, result.support_bound().saturating_sub(1)] {
                if index >= dim {
                    return Err(LieError::IndexOutOfRange { index, dim });
                }
            }
            if i == j {
                if result.is_zero() {
                    continue;
                }
                return Err(LieError::InvalidPair(i, j));
            }
            let (key, value) = if i < j { ((i, j), result) } else { ((j, i), -&result) };
            if structure.contains_key(&key) {
                return Err(LieError::InvalidPair(key.0, key.1));
            }
            if !value.is_zero() {
                structure.insert(key, value);
            }
        }
        Ok(Self { name: name.into(), labels, structure })
    }

    /// Convenience constructor from labelled integer tables, e.g.
    /// `("e", "f", &[("h", 1)])`.
    pub fn from_table(
        name: &str,
        labels: &[&str],
        table: &[(&str, &str, &[(&str, i64)])],
    ) -> Result<Self, LieError> {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let find = |l: &str| {
            labels.iter().position(|x| x == l).ok_or_else(|| LieError::UnknownLabel(l.to_string()))
        };
        let mut brackets = Vec::new();
        for (a, b, terms) in table {
            let mut pairs = Vec::new();
            for (k, c) in terms.iter() {
                pairs.push((find(k)?, int(*c)));
            }
            brackets.push((find(a)?, find(b)?, SparseVec::from_pairs(pairs)));
        }
        Self::new(name, labels.clone(), brackets)
    }

    pub fn abelian(name: impl Into<String>, labels: Vec<String>) -> Result<Self, LieError> {
        Self::new(name, labels, std::iter::empty())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Nonzero structure constants, `(i, j, [b_i, b_j])` with `i < j`.
    pub fn structure(&self) -> impl Iterator<Item = (usize, usize, &SparseVec)> + '_ {
        self.structure.iter().map(|(&(i, j), v)| (i, j, v))
    }

    /// `[b_i, b_j]` in basis coordinates.
    pub fn bracket_basis(&self, i: usize, j: usize) -> SparseVec {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => SparseVec::new(),
            Less => self.structure.get(&(i, j)).cloned().unwrap_or_default(),
            Greater => self.structure.get(&(j, i)).map(|v| -v).unwrap_or_default(),
        }
    }

    pub fn bracket_sparse(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                if i != j {
                    out.axpy(&(a * b), &self.bracket_basis(i, j));
                }
            }
        }
        out
    }

    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Result<Vec<Rational>, LieError> {
        self.check_len(u.len())?;
        self.check_len(v.len())?;
        let w = self.bracket_sparse(&SparseVec::from_dense(u), &SparseVec::from_dense(v));
        Ok(w.to_dense(self.dim()))
    }

    fn check_len(&self, found: usize) -> Result<(), LieError> {
        if found == self.dim() {
            Ok(())
        } else {
            Err(LieError::DimensionMismatch { expected: self.dim(), found })
        }
    }

    /// Matrix of `ad_{b_i}`: column `j` holds `[b_i, b_j]`.
    pub fn ad_matrix(&self, i: usize) -> SparseMatrix {
        let n = self.dim();
        let mut m = SparseMatrix::zeros(n, n);
        for j in 0..n {
            for (k, c) in self.bracket_basis(i, j).iter() {
                m.add_entry(k, j, c.clone());
            }
        }
        m
    }

    /// Matrix of `ad_v` for an arbitrary element.
    pub fn ad_of(&self, v: &SparseVec) -> SparseMatrix {
        let n = self.dim();
        let mut m = SparseMatrix::zeros(n, n);
        for (i, c) in v.iter() {
            m.axpy(c, &self.ad_matrix(i));
        }
        m
    }

    pub fn is_abelian(&self) -> bool {
        self.structure.is_empty()
    }

    pub fn format_element(&self, v: &SparseVec) -> String {
        format_combination(&self.labels, v)
    }

    /// Checks Jacobi on every basis triple `i < j < k`, reporting the first
    /// failure in lexicographic order.
    pub fn validate(&self) -> Result<(), JacobiViolation> {
        let n = self.dim();
        let unit = SparseVec::unit;
        for i in 0..n {
            for j in i + 1..n {
                let bij = self.bracket_basis(i, j);
                for k in j + 1..n {
                    let mut residual = self.bracket_sparse(&bij, &unit(k));
                    residual.axpy(&Rational::one(), &self.bracket_sparse(&self.bracket_basis(j, k), &unit(i)));
                    residual.axpy(&Rational::one(), &self.bracket_sparse(&self.bracket_basis(k, i), &unit(j)));
                    if !residual.is_zero() {
                        return Err(JacobiViolation {
                            triple: [i, j, k],
                            labels: [i, j, k].map(|x| self.labels[x].clone()),
                            residual_text: self.format_element(&residual),
                            residual,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// `Z(g)`: common kernel of all `ad_{b_i}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let ads: Vec<SparseMatrix> = (0..n).map(|i| self.ad_matrix(i)).collect();
        let refs: Vec<&SparseMatrix> = ads.iter().collect();
        kernel_basis(&SparseMatrix::vstack(n, &refs))
    }

    /// Leibniz system whose kernel is `Der(g)`; unknown `k * dim + j` is the
    /// `(k, j)` entry of the derivation matrix.
    pub fn leibniz_system(&self) -> SparseMatrix {
        let n = self.dim();
        let mut rows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let bij = self.bracket_basis(i, j);
                let mut eqs: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); n];
                // D([b_i, b_j])
                for (k, c) in bij.iter() {
                    for (m, eq) in eqs.iter_mut().enumerate() {
                        eq.push((m * n + k, c.clone()));
                    }
                }
                for k in 0..n {
                    // - [D b_i, b_j]
                    for (m, c) in self.bracket_basis(k, j).iter() {
                        eqs[m].push((k * n + i, -c.clone()));
                    }
                    // - [b_i, D b_j]
                    for (m, c) in self.bracket_basis(i, k).iter() {
                        eqs[m].push((k * n + j, -c.clone()));
                    }
                }
                rows.extend(eqs.into_iter().map(SparseVec::from_pairs).filter(|r| !r.is_zero()));
            }
        }
        SparseMatrix::from_rows(n * n, rows)
    }

    /// `Der(g)` as a subspace of flattened `dim × dim` matrices (row-major).
    pub fn derivation_space(&self) -> Subspace {
        kernel_basis(&self.leibniz_system())
    }

    pub fn derivations(&self) -> Vec<SparseMatrix> {
        let n = self.dim();
        self.derivation_space().basis().iter().map(|v| unflatten(n, v)).collect()
    }

    pub fn is_derivation(&self, d: &SparseMatrix) -> bool {
        self.leibniz_witness(d).is_none()
    }

    /// First basis pair on which Leibniz fails for `d`, if any.
    pub fn leibniz_witness(&self, d: &SparseMatrix) -> Option<(usize, usize)> {
        let n = self.dim();
        assert_eq!((d.rows(), d.cols()), (n, n));
        let col = |j: usize| d.mul_vec(&SparseVec::unit(j));
        for i in 0..n {
            for j in i + 1..n {
                let lhs = d.mul_vec(&self.bracket_basis(i, j));
                let mut rhs = self.bracket_sparse(&col(i), &SparseVec::unit(j));
                rhs.axpy(&Rational::one(), &self.bracket_sparse(&SparseVec::unit(i), &col(j)));
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// `Inn(g)`: span of the flattened `ad_{b_i}`.
    pub fn inner_derivations(&self) -> Subspace {
        let n = self.dim();
        Subspace::span(n * n, (0..n).map(|i| flatten(&self.ad_matrix(i))))
    }

    /// True iff the coordinate span of `indices` is closed under bracket.
    fn coordinate_closure_witness(&self, indices: &[usize], with_all: bool) -> Option<(usize, usize)> {
        let inside: HashSet<usize> = indices.iter().copied().collect();
        let outer: Vec<usize> = if with_all { (0..self.dim()).collect() } else { indices.to_vec() };
        for &a in &outer {
            for &b in indices {
                if self.bracket_basis(a, b).iter().any(|(k, _)| !inside.contains(&k)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_coordinate_ideal(&self, indices: &[usize]) -> bool {
        self.coordinate_closure_witness(indices, true).is_none()
    }

    /// Subalgebra on the span of the given basis vectors, rebased so that
    /// `indices[t]` becomes basis element `t`.
    pub fn subalgebra(&self, indices: &[usize]) -> Result<LieAlgebra, LieError> {
        let mut position = vec![usize::MAX; self.dim()];
        for (t, &i) in indices.iter().enumerate() {
            if i >= self.dim() {
                return Err(LieError::IndexOutOfRange { index: i, dim: self.dim() });
            }
            if position[i] != usize::MAX {
                return Err(LieError::DuplicateLabel(self.labels[i].clone()));
            }
            position[i] = t;
        }
        if let Some((a, b)) = self.coordinate_closure_witness(indices, false) {
            return Err(LieError::NotASubalgebra(self.labels[a].clone(), self.labels[b].clone()));
        }
        let mut brackets = Vec::new();
        for (s, &a) in indices.iter().enumerate() {
            for (t, &b) in indices.iter().enumerate().skip(s + 1) {
                let v = self.bracket_basis(a, b).reindex(|k| position[k]);
                brackets.push((s, t, v));
            }
        }
        let labels = indices.iter().map(|&i| self.labels[i].clone()).collect();
        LieAlgebra::new(format!("{}|sub", self.name), labels, brackets)
    }

    /// Quotient `g / ideal` on the complement of the ideal's echelon pivots.
    pub fn quotient(&self, ideal: &Subspace) -> Result<LieAlgebra, LieError> {
        if ideal.ambient_dim() != self.dim() {
            return Err(LieError::DimensionMismatch { expected: self.dim(), found: ideal.ambient_dim() });
        }
        for i in 0..self.dim() {
            for (t, v) in ideal.basis().iter().enumerate() {
                if !ideal.contains_sparse(&self.bracket_sparse(&SparseVec::unit(i), v)) {
                    return Err(LieError::NotAnIdeal { element: self.labels[i].clone(), ideal_vector: t });
                }
            }
        }
        let pivots: HashSet<usize> = ideal.pivot_columns().into_iter().collect();
        let kept: Vec<usize> = (0..self.dim()).filter(|i| !pivots.contains(i)).collect();
        let mut position = vec![usize::MAX; self.dim()];
        for (t, &i) in kept.iter().enumerate() {
            position[i] = t;
        }
        let project = |w: &SparseVec| {
            let mut w = w.clone();
            for row in ideal.basis() {
                let (p, _) = row.leading().unwrap();
                let c = w.get(p);
                if !c.is_zero() {
                    w.axpy(&-c, row);
                }
            }
            w.reindex(|k| position[k])
        };
        let mut brackets = Vec::new();
        for (s, &a) in kept.iter().enumerate() {
            for (t, &b) in kept.iter().enumerate().skip(s + 1) {
                brackets.push((s, t, project(&self.bracket_basis(a, b))));
            }
        }
        let labels = kept.iter().map(|&i| self.labels[i].clone()).collect();
        let q = LieAlgebra::new(format!("{}/ideal", self.name), labels, brackets)?;
        q.validate().map_err(LieError::Jacobi)?;
        Ok(q)
    }

    /// `s ⋉ r` on `basis(s) ++ basis(r)`, where `action[i]` is the matrix of
    /// `[s_i, -]` on `r`.
    pub fn semidirect(s: &LieAlgebra, r: &LieAlgebra, action: &[SparseMatrix]) -> Result<LieAlgebra, LieError> {
        if action.len() != s.dim() {
            return Err(LieError::ActionCount { expected: s.dim(), found: action.len() });
        }
        for (i, a) in action.iter().enumerate() {
            if (a.rows(), a.cols()) != (r.dim(), r.dim()) {
                return Err(LieError::DimensionMismatch { expected: r.dim(), found: a.rows().max(a.cols()) });
            }
            if let Some((p, q)) = r.leibniz_witness(a) {
                return Err(LieError::ActionNotDerivation {
                    generator: s.labels[i].clone(),
                    left: r.labels[p].clone(),
                    right: r.labels[q].clone(),
                });
            }
        }
        for i in 0..s.dim() {
            for j in i + 1..s.dim() {
                let mut image = SparseMatrix::zeros(r.dim(), r.dim());
                for (k, c) in s.bracket_basis(i, j).iter() {
                    image.axpy(c, &action[k]);
                }
                if image != action[i].commutator(&action[j]) {
                    return Err(LieError::ActionNotHomomorphism(s.labels[i].clone(), s.labels[j].clone()));
                }
            }
        }
        let shift = s.dim();
        let mut brackets: Vec<(usize, usize, SparseVec)> =
            s.structure().map(|(i, j, v)| (i, j, v.clone())).collect();
        for (i, j, v) in r.structure() {
            brackets.push((i + shift, j + shift, v.reindex(|k| k + shift)));
        }
        let columns: Vec<SparseMatrix> = action.iter().map(SparseMatrix::transpose).collect();
        for (i, cols) in columns.iter().enumerate() {
            for j in 0..r.dim() {
                let v = cols.row(j).reindex(|k| k + shift);
                if !v.is_zero() {
                    brackets.push((i, j + shift, v));
                }
            }
        }
        let labels = s.labels.iter().chain(&r.labels).cloned().collect();
        let g = LieAlgebra::new(format!("{}x{}", s.name, r.name), labels, brackets)?;
        g.validate().map_err(LieError::Jacobi)?;
        Ok(g)
    }

    /// Same algebra with basis reordered: new basis element `t` is old
    /// element `order[t]`.
    pub fn permuted(&self, order: &[usize]) -> LieAlgebra {
        assert_eq!(order.len(), self.dim());
        self.subalgebra(order).expect("permutation").with_name(self.name.clone())
    }
}

/// Row-major flattening of a square matrix.
pub fn flatten(m: &SparseMatrix) -> SparseVec {
    let n = m.cols();
    SparseVec::from_pairs(m.entries().map(|(r, c, v)| (r * n + c, v.clone())))
}

pub fn unflatten(n: usize, v: &SparseVec) -> SparseMatrix {
    SparseMatrix::from_triplets(n, n, v.iter().map(|(i, c)| (i / n, i % n, c.clone())))
}

/// Human-readable linear combination such as `2e - h + 1/3 x1`.
pub fn format_combination(labels: &[String], v: &SparseVec) -> String {
    if v.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (n, (i, c)) in v.iter().enumerate() {
        let negative = c < &Rational::zero();
        let mag = if negative { -c.clone() } else { c.clone() };
        match (n, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if !mag.is_one() {
            if mag.is_integer() {
                out.push_str(&mag.to_string());
            } else {
                out.push_str(&format!("{mag} "));
            }
        }
        out.push_str(&labels[i]);
    }
    out
}
