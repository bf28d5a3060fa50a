use lie_cohomology::linalg::{dense, int, kernel_basis, rank, ratio, Rational, SparseMatrix, SparseVec, Subspace};
use num_traits::Zero;
use proptest::prelude::*;

fn small_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        // bias towards zeros so ranks vary
        let entry = prop_oneof![3 => Just(0i64), 2 => -3i64..=3];
        proptest::collection::vec(proptest::collection::vec(entry, c), r)
    })
}

fn to_sparse(rows: &[Vec<i64>]) -> SparseMatrix {
    let cols = rows[0].len();
    SparseMatrix::from_dense(cols, &rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect::<Vec<_>>())
}

fn to_dense(rows: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn sparse_rank_matches_dense_oracle(rows in small_matrix(30, 30)) {
        prop_assert_eq!(rank(&to_sparse(&rows)), dense::rank(to_dense(&rows)));
    }

    #[test]
    fn rank_plus_nullity(rows in small_matrix(12, 15)) {
        let m = to_sparse(&rows);
        let k = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + k.dim(), m.cols());
        for v in k.basis() {
            prop_assert!(m.mul_vec(v).is_zero());
        }
    }

    #[test]
    fn rank_invariant_under_row_and_column_permutation(
        rows in small_matrix(10, 10),
        seed in any::<u64>(),
    ) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut rp: Vec<usize> = (0..rows.len()).collect();
        let mut cp: Vec<usize> = (0..rows[0].len()).collect();
        rp.shuffle(&mut rng);
        cp.shuffle(&mut rng);
        let shuffled: Vec<Vec<i64>> = rp.iter().map(|&r| cp.iter().map(|&c| rows[r][c]).collect()).collect();
        prop_assert_eq!(rank(&to_sparse(&rows)), rank(&to_sparse(&shuffled)));
        prop_assert_eq!(rank(&to_sparse(&rows)), rank(&to_sparse(&rows).transpose()));
    }

    #[test]
    fn intersection_dimension_formula(a in small_matrix(5, 6), b in small_matrix(5, 6)) {
        // align ambient dims
        let cols = a[0].len().min(b[0].len());
        let trim = |m: &[Vec<i64>]| -> Vec<Vec<Rational>> {
            m.iter().map(|r| r[..cols].iter().map(|&x| int(x)).collect()).collect()
        };
        let u = Subspace::from_dense(cols, &trim(&a)).unwrap();
        let v = Subspace::from_dense(cols, &trim(&b)).unwrap();
        let meet = u.intersect(&v).unwrap();
        let join = u.sum(&v).unwrap();
        prop_assert_eq!(meet.dim() + join.dim(), u.dim() + v.dim());
        prop_assert!(meet.is_subspace_of(&u).unwrap());
        prop_assert!(meet.is_subspace_of(&v).unwrap());
        let ext = join.complement_of(&u).unwrap();
        prop_assert_eq!(ext.len() + u.dim(), join.dim());
    }
}

#[test]
fn fixed_examples() {
    assert_eq!(rank(&SparseMatrix::identity(3)), 3);
    assert_eq!(rank(&SparseMatrix::zeros(4, 7)), 0);
    assert_eq!(kernel_basis(&SparseMatrix::identity(3)).dim(), 0);
    assert_eq!(kernel_basis(&SparseMatrix::zeros(2, 3)).dim(), 3);
    let k = kernel_basis(&to_sparse(&[vec![1, 2]]));
    assert_eq!(k, Subspace::from_dense(2, &[vec![int(-2), int(1)]]).unwrap());
}

#[test]
fn subspace_examples() {
    let e1 = Subspace::from_dense(2, &[vec![int(1), int(0)]]).unwrap();
    let e2 = Subspace::from_dense(2, &[vec![int(0), int(1)]]).unwrap();
    let diag = Subspace::from_dense(2, &[vec![int(1), int(1)]]).unwrap();
    assert_eq!(e1.intersect(&e2).unwrap().dim(), 0);
    assert_eq!(e1.intersect(&e1).unwrap(), e1);
    assert_eq!(Subspace::full(2).intersect(&diag).unwrap(), diag);
    assert!(e1.contains(&[int(2), int(0)]).unwrap());
    assert!(!e1.contains(&[int(0), int(1)]).unwrap());
    assert!(diag.contains(&[int(0), int(0)]).unwrap());
    assert!(e1.contains(&[int(1)]).is_err());
}

#[test]
fn rational_entries_survive_elimination() {
    let m = SparseMatrix::from_dense(
        2,
        &[vec![ratio(1, 3), ratio(1, 2)], vec![ratio(2, 3), int(1)], vec![int(0), ratio(-7, 5)]],
    );
    assert_eq!(rank(&m), 2);
    assert_eq!(dense::rank_of(&m), 2);
    let v = SparseVec::from_dense(&[ratio(3, 2), int(-1)]);
    assert!(m.row(0).dot(&v).is_zero());
}
