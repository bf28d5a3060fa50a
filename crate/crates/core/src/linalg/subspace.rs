use super::{kernel_basis, Echelon, LinalgError, Rational, SparseMatrix, SparseVec};

/// A linear subspace of `Q^ambient_dim`, stored as a reduced row-echelon
/// basis so that equal spans compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<SparseVec>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: (0..ambient_dim).map(SparseVec::unit).collect() }
    }

    /// Span of the given vectors. Panics if any vector has support beyond
    /// `ambient_dim`; use [`Subspace::from_dense`] for checked input.
    pub fn span(ambient_dim: usize, vectors: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut ech = Echelon::new(ambient_dim);
        for v in vectors {
            assert!(v.support_bound() <= ambient_dim, "vector outside ambient space");
            ech.insert(v);
        }
        Self { ambient_dim, basis: ech.into_reduced_rows() }
    }

    pub fn from_dense(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Result<Self, LinalgError> {
        for v in vectors {
            check_len(ambient_dim, v.len())?;
        }
        Ok(Self::span(ambient_dim, vectors.iter().map(|v| SparseVec::from_dense(v))))
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Self {
        Self::span(ambient_dim, indices.iter().map(|&i| SparseVec::unit(i)))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn basis_dense(&self) -> Vec<Vec<Rational>> {
        self.basis.iter().map(|v| v.to_dense(self.ambient_dim)).collect()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.basis.iter().map(|v| v.leading().unwrap().0).collect()
    }

    fn echelon(&self) -> Echelon {
        let mut ech = Echelon::new(self.ambient_dim);
        for v in &self.basis {
            ech.insert(v.clone());
        }
        ech
    }

    /// Membership test: the augmented basis has the same rank iff `w` is in
    /// the span.
    pub fn contains(&self, w: &[Rational]) -> Result<bool, LinalgError> {
        check_len(self.ambient_dim, w.len())?;
        Ok(self.contains_sparse(&SparseVec::from_dense(w)))
    }

    pub fn contains_sparse(&self, w: &SparseVec) -> bool {
        assert!(w.support_bound() <= self.ambient_dim);
        let mut ech = self.echelon();
        !ech.insert(w.clone())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, LinalgError> {
        check_len(self.ambient_dim, other.ambient_dim)?;
        let ech = other.echelon();
        Ok(self.basis.iter().all(|v| ech.contains(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        check_len(self.ambient_dim, other.ambient_dim)?;
        Ok(Self::span(self.ambient_dim, self.basis.iter().chain(&other.basis).cloned()))
    }

    /// `self ∩ other`, computed from the kernel of `[U | V]` where the
    /// columns are the two bases.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        check_len(self.ambient_dim, other.ambient_dim)?;
        let a = self.dim();
        if a == 0 || other.dim() == 0 {
            return Ok(Self::zero(self.ambient_dim));
        }
        let stacked: Vec<SparseVec> = self.basis.iter().chain(&other.basis).cloned().collect();
        // rows of `stacked` are the columns of [U | V]
        let columns = SparseMatrix::from_rows(self.ambient_dim, stacked).transpose();
        let relations = kernel_basis(&columns);
        let vectors = relations.basis.iter().map(|rel| {
            let mut x = SparseVec::new();
            for (i, c) in rel.iter().take_while(|(i, _)| *i < a) {
                x.axpy(c, &self.basis[i]);
            }
            x
        });
        Ok(Self::span(self.ambient_dim, vectors))
    }

    /// Vectors of `self`'s basis that extend a basis of `sub` to a basis of
    /// `sub + self`, chosen greedily in basis order.
    pub fn complement_of(&self, sub: &Subspace) -> Result<Vec<SparseVec>, LinalgError> {
        check_len(self.ambient_dim, sub.ambient_dim)?;
        let mut ech = sub.echelon();
        Ok(self.basis.iter().filter(|v| ech.insert((*v).clone())).cloned().collect())
    }

    /// Image of the subspace under a linear map given by `m` (acting on
    /// column vectors).
    pub fn image_under(&self, m: &SparseMatrix) -> Result<Subspace, LinalgError> {
        check_len(m.cols(), self.ambient_dim)?;
        Ok(Self::span(m.rows(), self.basis.iter().map(|v| m.mul_vec(v))))
    }
}

fn check_len(expected: usize, found: usize) -> Result<(), LinalgError> {
    if expected == found {
        Ok(())
    } else {
        Err(LinalgError::DimensionMismatch { expected, found })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn sub(vs: &[&[i64]]) -> Subspace {
        let n = vs[0].len();
        Subspace::from_dense(n, &vs.iter().map(|v| v.iter().map(|&x| int(x)).collect()).collect::<Vec<_>>())
            .unwrap()
    }

    #[test]
    fn intersections() {
        let x = sub(&[&[1, 0]]);
        let y = sub(&[&[0, 1]]);
        assert_eq!(x.intersect(&y).unwrap().dim(), 0);
        assert_eq!(x.intersect(&x).unwrap(), x);
        let plane = sub(&[&[1, 0], &[0, 1]]);
        let diag = sub(&[&[1, 1]]);
        assert_eq!(plane.intersect(&diag).unwrap(), diag);
    }

    #[test]
    fn intersection_dimension_formula() {
        let u = sub(&[&[1, 0, 0, 1], &[0, 1, 0, 1]]);
        let v = sub(&[&[1, 1, 0, 2], &[0, 0, 1, 0]]);
        let meet = u.intersect(&v).unwrap();
        let join = u.sum(&v).unwrap();
        assert_eq!(meet.dim(), u.dim() + v.dim() - join.dim());
        assert_eq!(meet, sub(&[&[1, 1, 0, 2]]));
    }

    #[test]
    fn membership() {
        let x = sub(&[&[1, 0]]);
        assert!(x.contains(&[int(2), int(0)]).unwrap());
        assert!(!x.contains(&[int(0), int(1)]).unwrap());
        assert!(x.contains(&[int(0), int(0)]).unwrap());
        assert!(Subspace::zero(2).contains(&[int(0), int(0)]).unwrap());
        assert!(x.contains(&[int(1)]).is_err());
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let x = sub(&[&[1, 0]]);
        let y = sub(&[&[1, 0, 0]]);
        assert_eq!(
            x.intersect(&y),
            Err(LinalgError::DimensionMismatch { expected: 2, found: 3 })
        );
    }

    #[test]
    fn canonical_form_makes_equal_spans_equal() {
        assert_eq!(sub(&[&[1, 1], &[1, -1]]), sub(&[&[2, 0], &[0, 3]]));
        assert_eq!(sub(&[&[2, 4, 6]]), sub(&[&[-1, -2, -3]]));
    }

    #[test]
    fn complement_extends_basis() {
        let big = sub(&[&[1, 0, 0], &[0, 1, 0]]);
        let small = sub(&[&[1, 1, 0]]);
        let ext = big.complement_of(&small).unwrap();
        assert_eq!(ext.len(), 1);
    }
}
