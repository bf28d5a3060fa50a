//! Textbook dense Gaussian elimination, kept deliberately separate from the
//! sparse echelon code so the two can check each other.

use num_traits::Zero;

use super::{Rational, SparseMatrix};

/// Rank of a dense row-major matrix by partial-pivot-free elimination.
pub fn rank(mut a: Vec<Vec<Rational>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        let Some(found) = (pivot_row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(found, pivot_row);
        let (upper, lower) = a.split_at_mut(pivot_row + 1);
        let pivot = &upper[pivot_row];
        for row in lower.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot[col];
            for j in col..cols {
                if !pivot[j].is_zero() {
                    let delta = &factor * &pivot[j];
                    row[j] -= delta;
                }
            }
        }
        pivot_row += 1;
    }
    pivot_row
}

pub fn rank_of(m: &SparseMatrix) -> usize {
    rank(m.to_dense())
}
