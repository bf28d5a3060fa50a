use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{Rational, SparseMatrix, SparseVec, Subspace};

/// Incrementally built row-echelon form. Each stored row is keyed by its
/// leading column and normalized so the leading coefficient is 1.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    width: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Self { width, rows: BTreeMap::new() }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Eliminates leading entries against stored pivots. The result is zero
    /// iff `v` lies in the span of the stored rows.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        while let Some((lead, coef)) = v.leading() {
            let Some(pivot) = self.rows.get(&lead) else { break };
            let factor = -coef.clone();
            v.axpy(&factor, pivot);
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Adds `v` to the row space. Returns `true` if the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        debug_assert!(v.support_bound() <= self.width);
        let mut v = self.reduce(v);
        let Some((lead, coef)) = v.leading() else { return false };
        if !coef.is_one() {
            let inv = coef.recip();
            v.scale(&inv);
        }
        self.rows.insert(lead, v);
        true
    }

    /// Back-substitutes into reduced row-echelon form, rows ordered by
    /// leading column.
    pub fn into_reduced_rows(self) -> Vec<SparseVec> {
        let mut done: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (lead, mut row) in self.rows.into_iter().rev() {
            let hits: Vec<(usize, Rational)> = row
                .iter()
                .filter(|(c, _)| *c != lead && done.contains_key(c))
                .map(|(c, v)| (c, v.clone()))
                .collect();
            for (c, v) in hits {
                row.axpy(&-v, &done[&c]);
            }
            done.insert(lead, row);
        }
        done.into_values().collect()
    }
}

/// Rank over the rationals. Rows are fed sparsest-first to limit fill.
pub fn rank(m: &SparseMatrix) -> usize {
    echelon_of(m).rank()
}

fn echelon_of(m: &SparseMatrix) -> Echelon {
    let mut order: Vec<usize> = (0..m.rows()).filter(|&r| !m.row(r).is_zero()).collect();
    order.sort_by_key(|&r| (m.row(r).nnz(), r));
    let mut ech = Echelon::new(m.cols());
    for r in order {
        ech.insert(m.row(r).clone());
        if ech.rank() == m.cols() {
            break;
        }
    }
    ech
}

/// Basis of the right null space `{ v : m v = 0 }`.
pub fn kernel_basis(m: &SparseMatrix) -> Subspace {
    let cols = m.cols();
    let reduced = echelon_of(m).into_reduced_rows();
    let mut is_pivot = vec![false; cols];
    for row in &reduced {
        is_pivot[row.leading().expect("nonzero row").0] = true;
    }
    let mut kernel: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); cols];
    for (f, slot) in kernel.iter_mut().enumerate() {
        if !is_pivot[f] {
            slot.push((f, Rational::one()));
        }
    }
    for row in &reduced {
        let (lead, _) = row.leading().unwrap();
        for (c, v) in row.iter() {
            if c != lead && !is_pivot[c] {
                debug_assert!(!v.is_zero());
                kernel[c].push((lead, -v.clone()));
            }
        }
    }
    let vectors = kernel
        .into_iter()
        .enumerate()
        .filter(|(f, _)| !is_pivot[*f])
        .map(|(_, pairs)| SparseVec::from_pairs(pairs));
    Subspace::span(cols, vectors)
}
