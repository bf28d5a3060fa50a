use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Rational;

/// Sparse vector: entries sorted by index, zeros never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds from arbitrary `(index, value)` pairs; duplicates are summed.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut pairs: Vec<_> = pairs.into_iter().collect();
        pairs.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, Rational)> = Vec::with_capacity(pairs.len());
        for (i, v) in pairs {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc += v,
                _ => entries.push((i, v)),
            }
        }
        entries.retain(|(_, v)| !v.is_zero());
        Self { entries }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        Self {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn unit(index: usize) -> Self {
        Self { entries: vec![(index, Rational::one())] }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    /// Largest stored index plus one (0 for the zero vector).
    pub fn support_bound(&self) -> usize {
        self.entries.last().map_or(0, |(i, _)| i + 1)
    }

    pub fn get(&self, index: usize) -> Rational {
        match self.entries.binary_search_by_key(&index, |(i, _)| *i) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Adds `value` at `index`, dropping the entry if it cancels.
    pub fn add_at(&mut self, index: usize, value: Rational) {
        if value.is_zero() {
            return;
        }
        match self.entries.binary_search_by_key(&index, |(i, _)| *i) {
            Ok(pos) => {
                self.entries[pos].1 += value;
                if self.entries[pos].1.is_zero() {
                    self.entries.remove(pos);
                }
            }
            Err(pos) => self.entries.insert(pos, (index, value)),
        }
    }

    pub fn scale(&mut self, factor: &Rational) {
        if factor.is_zero() {
            self.entries.clear();
        } else {
            for (_, v) in &mut self.entries {
                *v *= factor;
            }
        }
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        let mut out = self.clone();
        out.scale(factor);
        out
    }

    /// `self += factor * other`.
    pub fn axpy(&mut self, factor: &Rational, other: &SparseVec) {
        if factor.is_zero() || other.is_zero() {
            return;
        }
        let mut merged = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, _)), Some((j, _))) if i < j => merged.push(a.next().unwrap()),
                (Some((i, _)), Some((j, _))) if i > j => {
                    let (j, w) = b.next().unwrap();
                    merged.push((*j, factor * w));
                }
                (Some(_), Some(_)) => {
                    let (i, v) = a.next().unwrap();
                    let (_, w) = b.next().unwrap();
                    let sum = v + factor * w;
                    if !sum.is_zero() {
                        merged.push((i, sum));
                    }
                }
                (Some(_), None) => merged.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (j, w) = b.next().unwrap();
                    merged.push((*j, factor * w));
                }
                (None, None) => break,
            }
        }
        self.entries = merged;
    }

    pub fn dot(&self, other: &SparseVec) -> Rational {
        let mut acc = Rational::zero();
        let (mut p, mut q) = (0, 0);
        while p < self.entries.len() && q < other.entries.len() {
            let (i, v) = &self.entries[p];
            let (j, w) = &other.entries[q];
            match i.cmp(j) {
                std::cmp::Ordering::Less => p += 1,
                std::cmp::Ordering::Greater => q += 1,
                std::cmp::Ordering::Equal => {
                    acc += v * w;
                    p += 1;
                    q += 1;
                }
            }
        }
        acc
    }

    /// Re-indexes entries through `map`; the map must be injective.
    pub fn reindex(&self, map: impl Fn(usize) -> usize) -> Self {
        Self::from_pairs(self.entries.iter().map(|(i, v)| (map(*i), v.clone())))
    }
}

impl Add<&SparseVec> for &SparseVec {
    type Output = SparseVec;
    fn add(self, rhs: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.axpy(&Rational::one(), rhs);
        out
    }
}

impl Sub<&SparseVec> for &SparseVec {
    type Output = SparseVec;
    fn sub(self, rhs: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.axpy(&-Rational::one(), rhs);
        out
    }
}

impl Neg for &SparseVec {
    type Output = SparseVec;
    fn neg(self) -> SparseVec {
        self.scaled(&-Rational::one())
    }
}

/// Row-major sparse matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![SparseVec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self { rows: n, cols: n, data: (0..n).map(SparseVec::unit).collect() }
    }

    /// Panics if some row has an entry at or beyond `cols`.
    pub fn from_rows(cols: usize, rows: Vec<SparseVec>) -> Self {
        assert!(rows.iter().all(|r| r.support_bound() <= cols), "row entry out of range");
        Self { rows: rows.len(), cols, data: rows }
    }

    pub fn from_dense(cols: usize, rows: &[Vec<Rational>]) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged dense matrix");
        Self::from_rows(cols, rows.iter().map(|r| SparseVec::from_dense(r)).collect())
    }

    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (r, c, v) in triplets {
            m.add_entry(r, c, v);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &SparseVec {
        &self.data[r]
    }

    pub fn row_vecs(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn into_row_vecs(self) -> Vec<SparseVec> {
        self.data
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(SparseVec::is_zero)
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.data[r].get(c)
    }

    pub fn add_entry(&mut self, r: usize, c: usize, value: Rational) {
        assert!(r < self.rows && c < self.cols, "entry ({r}, {c}) out of range");
        self.data[r].add_at(c, value);
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, c, v)))
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        self.data.iter().map(|r| r.to_dense(self.cols)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.cols];
        for (r, c, v) in self.entries() {
            cols[c].push((r, v.clone()));
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data: cols.into_iter().map(SparseVec::from_pairs).collect(),
        }
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| r.scaled(factor)).collect(),
        }
    }

    /// `self += factor * other`.
    pub fn axpy(&mut self, factor: &Rational, other: &SparseMatrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            a.axpy(factor, b);
        }
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        assert!(v.support_bound() <= self.cols, "vector longer than matrix width");
        SparseVec::from_pairs(
            self.data
                .iter()
                .enumerate()
                .map(|(r, row)| (r, row.dot(v)))
                .filter(|(_, x)| !x.is_zero()),
        )
    }

    /// Stacks matrices vertically; all must share a column count.
    pub fn vstack(cols: usize, blocks: &[&SparseMatrix]) -> Self {
        let mut data = Vec::new();
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            data.extend(b.data.iter().cloned());
        }
        Self { rows: data.len(), cols, data }
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &SparseMatrix) -> Self {
        let mut out = self * other;
        out.axpy(&-Rational::one(), &(other * self));
        out
    }

    /// Restricts to the given columns, renumbered in the order supplied.
    pub fn select_columns(&self, columns: &[usize]) -> Self {
        let mut position = vec![usize::MAX; self.cols];
        for (new, &old) in columns.iter().enumerate() {
            position[old] = new;
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                SparseVec::from_pairs(
                    row.iter()
                        .filter(|(c, _)| position[*c] != usize::MAX)
                        .map(|(c, v)| (position[c], v.clone())),
                )
            })
            .collect();
        Self { rows: self.rows, cols: columns.len(), data }
    }
}

impl Mul<&SparseMatrix> for &SparseMatrix {
    type Output = SparseMatrix;

    fn mul(self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = SparseVec::new();
                for (k, v) in row.iter() {
                    acc.axpy(v, &rhs.data[k]);
                }
                acc
            })
            .collect();
        SparseMatrix { rows: self.rows, cols: rhs.cols, data }
    }
}
