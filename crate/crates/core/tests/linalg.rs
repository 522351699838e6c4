mod common;

use antiprelie::linalg::Matrix;
use antiprelie::scalar::{Fp, Rational, Scalar};
use common::bareiss;
use proptest::prelude::*;

type Q = Rational;

fn matrix_q(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Q>> {
    prop::collection::vec(-3i64..=3, rows * cols)
        .prop_map(move |v| Matrix::from_vec(rows, cols, v.into_iter().map(Q::from_i64).collect()).unwrap())
}

fn any_matrix_q() -> impl Strategy<Value = Matrix<Q>> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| matrix_q(r, c))
}

fn square_q() -> impl Strategy<Value = Matrix<Q>> {
    (1usize..=4).prop_flat_map(|n| matrix_q(n, n))
}

proptest! {
    #[test]
    fn rank_matches_bareiss(m in any_matrix_q()) {
        prop_assert_eq!(m.rank(), bareiss::rank(&m.to_rows()));
    }

    #[test]
    fn rank_nullity(m in any_matrix_q()) {
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        for k in &kernel {
            prop_assert!(m.mul_vec(k).iter().all(Scalar::is_zero));
        }
        let cols = bareiss::from_columns(&kernel, m.cols());
        prop_assert_eq!(bareiss::rank(&cols), kernel.len());
    }

    #[test]
    fn solve_consistent_systems(m in any_matrix_q(), seed in prop::collection::vec(-3i64..=3, 5)) {
        let x: Vec<Q> = seed[..m.cols()].iter().map(|&v| Q::from_i64(v)).collect();
        let b = m.mul_vec(&x);
        let y = m.solve(&b).unwrap().expect("consistent system");
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn solve_reports_inconsistency(m in any_matrix_q(), b in prop::collection::vec(-3i64..=3, 5)) {
        let b: Vec<Q> = b[..m.rows()].iter().map(|&v| Q::from_i64(v)).collect();
        let mut augmented = m.to_rows();
        for (row, v) in augmented.iter_mut().zip(&b) {
            row.push(v.clone());
        }
        let consistent = bareiss::rank(&augmented) == bareiss::rank(&m.to_rows());
        let sol = m.solve(&b).unwrap();
        prop_assert_eq!(sol.is_some(), consistent);
        if let Some(y) = sol {
            prop_assert_eq!(m.mul_vec(&y), b);
        }
    }

    #[test]
    fn invert_iff_full_rank(m in square_q()) {
        let n = m.rows();
        match m.invert().unwrap() {
            Some(inv) => {
                prop_assert_eq!(m.mul(&inv), Matrix::identity(n));
                prop_assert_eq!(inv.mul(&m), Matrix::identity(n));
            }
            None => prop_assert!(bareiss::rank(&m.to_rows()) < n),
        }
    }

    #[test]
    fn invert_over_f5(v in prop::collection::vec(0i64..5, 9)) {
        let m: Matrix<Fp<5>> = Matrix::from_vec(3, 3, v.into_iter().map(Fp::<5>::from_i64).collect()).unwrap();
        if let Some(inv) = m.invert().unwrap() {
            prop_assert_eq!(m.mul(&inv), Matrix::identity(3));
        } else {
            prop_assert!(m.rank() < 3);
        }
    }

    #[test]
    fn transpose_reverses_products(a in matrix_q(2, 3), b in matrix_q(3, 2)) {
        prop_assert_eq!(a.mul(&b).transpose(), b.transpose().mul(&a.transpose()));
    }
}
