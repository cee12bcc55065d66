//! Property tests for the exact linear algebra layer.

use proptest::prelude::*;
use ringlab_core::linalg::{solve_vecmat, Mat, PrimeField, Subspace};

fn arb_prime() -> impl Strategy<Value = u32> {
    prop_oneof![Just(2u32), Just(3), Just(5), Just(7)]
}

/// A field together with a random matrix over it.
fn arb_mat() -> impl Strategy<Value = (u32, Mat)> {
    (arb_prime(), 1usize..=5, 1usize..=5).prop_flat_map(|(p, r, c)| {
        proptest::collection::vec(0u32..p, r * c).prop_map(move |entries| {
            let rows: Vec<Vec<u32>> = entries.chunks(c).map(<[u32]>::to_vec).collect();
            (p, Mat::from_rows(c, &rows))
        })
    })
}

fn arb_mat_with_vec() -> impl Strategy<Value = (u32, Mat, Vec<u32>)> {
    arb_mat().prop_flat_map(|(p, m)| {
        let rows = m.rows();
        proptest::collection::vec(0u32..p, rows).prop_map(move |v| (p, m.clone(), v))
    })
}

proptest! {
    #[test]
    fn rref_is_idempotent((p, m) in arb_mat()) {
        let f = PrimeField::new(p).unwrap();
        let once = m.rref(&f);
        let twice = once.mat.rref(&f);
        prop_assert_eq!(&once.mat, &twice.mat);
        prop_assert_eq!(&once.pivots, &twice.pivots);
    }

    #[test]
    fn rref_preserves_the_row_space((p, m) in arb_mat()) {
        let f = PrimeField::new(p).unwrap();
        let reduced = m.rref(&f);
        let original = Subspace::from_spanning(&f, &m);
        let after = Subspace::from_spanning(&f, &reduced.mat);
        prop_assert_eq!(original, after);
        prop_assert_eq!(reduced.rank(), m.rank(&f));
    }

    #[test]
    fn solving_a_consistent_system_succeeds((p, m, x) in arb_mat_with_vec()) {
        let f = PrimeField::new(p).unwrap();
        let w = m.apply_row(&f, &x);
        let solution = solve_vecmat(&f, &m, &w);
        prop_assert!(solution.is_some(), "x*M = w must be solvable for w built from x");
        let s = solution.unwrap();
        prop_assert_eq!(m.apply_row(&f, &s.particular), w);
        // every kernel basis row maps to zero
        for r in 0..s.kernel.dim() {
            let z = m.apply_row(&f, s.kernel.basis().row(r));
            prop_assert!(z.iter().all(|&c| c == 0));
        }
        // solution count is p^(kernel dim)
        prop_assert_eq!(
            s.count(&f),
            ringlab_core::linalg::checked_power(p as u64, s.kernel.dim() as u32)
        );
    }

    #[test]
    fn unsolvable_means_outside_the_row_space((p, m, w) in arb_mat_with_vec().prop_flat_map(|(p, m, _)| {
        let cols = m.cols();
        proptest::collection::vec(0u32..p, cols).prop_map(move |w| (p, m.clone(), w))
    })) {
        let f = PrimeField::new(p).unwrap();
        let in_row_space = Subspace::from_spanning(&f, &m).contains(&f, &w);
        prop_assert_eq!(solve_vecmat(&f, &m, &w).is_some(), in_row_space);
    }

    #[test]
    fn rank_nullity((p, m) in arb_mat()) {
        let f = PrimeField::new(p).unwrap();
        let rank = m.rank(&f);
        let left_kernel = solve_vecmat(&f, &m, &vec![0u32; m.cols()])
            .expect("zero is always a solution")
            .kernel;
        prop_assert_eq!(rank + left_kernel.dim(), m.rows());
    }

    #[test]
    fn sum_and_intersection_dimensions_balance(
        (p, m) in arb_mat(),
        seed in proptest::collection::vec(0u32..7, 25)
    ) {
        let f = PrimeField::new(p).unwrap();
        let cols = m.cols();
        let rows: Vec<Vec<u32>> = seed
            .chunks(cols)
            .take(3)
            .map(|ch| ch.iter().map(|&v| v % p).collect())
            .filter(|r: &Vec<u32>| r.len() == cols)
            .collect();
        let u = Subspace::from_spanning(&f, &m);
        let v = Subspace::from_rows(&f, cols, &rows);
        let sum = u.sum(&f, &v);
        let meet = u.intersect(&f, &v);
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + v.dim());
        prop_assert!(sum.contains_space(&f, &u));
        prop_assert!(sum.contains_space(&f, &v));
        prop_assert!(u.contains_space(&f, &meet));
        prop_assert!(v.contains_space(&f, &meet));
    }

    #[test]
    fn inverse_is_two_sided_or_absent((p, m) in arb_mat().prop_filter("square", |(_, m)| m.rows() == m.cols())) {
        let f = PrimeField::new(p).unwrap();
        let n = m.rows();
        match m.inverse(&f) {
            Some(inv) => {
                prop_assert_eq!(m.mul(&f, &inv), Mat::identity(n));
                prop_assert_eq!(inv.mul(&f, &m), Mat::identity(n));
            }
            None => prop_assert!(m.rank(&f) < n),
        }
    }
}
