use num_traits::Zero;
use proptest::prelude::*;

use super::*;
use crate::Rational;

fn arb_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = QMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| matrix_of_shape(r, c))
}

fn matrix_of_shape(rows: usize, cols: usize) -> impl Strategy<Value = QMatrix> {
    // mostly zeros so that rank deficiency is common
    proptest::collection::vec(proptest::collection::vec(prop_oneof![3 => Just(0i64), 2 => -4i64..=4], cols), rows)
        .prop_map(|rows| QMatrix::from_integers(&rows).unwrap())
}

fn arb_symmetric(max_n: usize) -> impl Strategy<Value = QMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(-3i64..=3, n * (n + 1) / 2).prop_map(move |vals| {
            let mut m = vec![vec![0i64; n]; n];
            let upper = (0..n).flat_map(|i| (i..n).map(move |j| (i, j)));
            for ((i, j), v) in upper.zip(vals) {
                m[i][j] = v;
                m[j][i] = v;
            }
            QMatrix::from_integers(&m).unwrap()
        })
    })
}

/// Product of elementary integer matrices, so `det = ±1`.
fn arb_unimodular(n: usize) -> impl Strategy<Value = QMatrix> {
    proptest::collection::vec((0..n, 0..n, -2i64..=2, any::<bool>()), 0..12).prop_map(move |ops| {
        let mut u = QMatrix::identity(n);
        for (i, j, k, flip) in ops {
            let mut e = QMatrix::identity(n);
            if i != j {
                e.set(i, j, Rational::from_integer(k.into()));
            } else if flip {
                e.set(i, i, Rational::from_integer((-1).into()));
            }
            u = u.mul(&e).unwrap();
        }
        u
    })
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in arb_matrix(6, 7)) {
        let once = rref(&m);
        let twice = rref(&once.matrix);
        prop_assert_eq!(&once.matrix, &twice.matrix);
        prop_assert_eq!(once.rank, twice.rank);
    }

    #[test]
    fn rank_nullity(m in arb_matrix(6, 7)) {
        let k = kernel_basis(&m);
        prop_assert_eq!(rref(&m).rank + k.dim(), m.cols());
        for i in 0..k.dim() {
            let image = m.mul_vec(&k.dense_vector(i)).unwrap();
            prop_assert!(image.iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn sparse_and_dense_agree(m in arb_matrix(7, 7)) {
        let s = SparseMatrix::from_dense(&m);
        prop_assert_eq!(s.rank(), rref(&m).rank);
        prop_assert_eq!(s.kernel(), kernel_basis(&m));
        prop_assert_eq!(s.transpose().to_dense(), m.transpose());
    }

    #[test]
    fn complement_splits_the_space((a, b) in (1..=6usize).prop_flat_map(|c| (matrix_of_shape(3, c), matrix_of_shape(4, c)))) {
        let sub = SparseMatrix::from_dense(&a).row_echelon();
        let sub = Subspace::from_echelon(sub);
        let within = sub.sum(&Subspace::from_echelon(SparseMatrix::from_dense(&b).row_echelon())).unwrap();
        let c = complement_in(&sub, &within).unwrap();
        prop_assert_eq!(c.dim() + sub.dim(), within.dim());
        prop_assert_eq!(sub.sum(&c).unwrap(), within);
    }

    #[test]
    fn inertia_is_a_congruence_invariant((s, u) in arb_symmetric(5).prop_flat_map(|s| {
        let n = s.rows();
        (Just(s), arb_unimodular(n))
    })) {
        let d = congruence_diagonalize(&s).unwrap();
        let check = d.transform.transpose().mul(&s).unwrap().mul(&d.transform).unwrap();
        prop_assert_eq!(check, QMatrix::diagonal(&d.diagonal));
        let moved = u.transpose().mul(&s).unwrap().mul(&u).unwrap();
        let e = congruence_diagonalize(&moved).unwrap();
        prop_assert_eq!((d.positive(), d.negative(), d.nullity()), (e.positive(), e.negative(), e.nullity()));
        let det_u = determinant(&u).unwrap();
        prop_assert_eq!(&det_u * &det_u, Rational::from_integer(1.into()));
    }
}
