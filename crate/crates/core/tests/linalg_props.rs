mod common;

use liemult::linalg::{int, kernel_basis, quotient_map, rref};
use liemult::{MatrixQ, Rational, Subspace};
use proptest::prelude::*;

use common::stacked_intersection;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = MatrixQ> {
    prop::collection::vec(-3i64..=3, rows * cols).prop_map(move |xs| {
        let rows: Vec<Vec<Rational>> = xs.chunks(cols).map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        MatrixQ::from_rows(rows.len(), cols, &rows).unwrap()
    })
}

fn sparse_subspace(n: usize) -> impl Strategy<Value = Subspace> {
    prop::collection::vec(prop::collection::vec(prop_oneof![3 => Just(0i64), 1 => -2i64..=2], n), 0..=n)
        .prop_map(move |vs| Subspace::span(n, vs.into_iter().map(|v| v.into_iter().map(int).collect::<Vec<_>>())).unwrap())
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in (1usize..6, 1usize..6).prop_flat_map(|(r, c)| matrix(r, c))) {
        let (once, pivots) = rref(&m);
        let (twice, pivots2) = rref(&once);
        prop_assert_eq!(once, twice);
        prop_assert_eq!(pivots, pivots2);
    }

    #[test]
    fn rank_plus_nullity(m in (1usize..6, 1usize..6).prop_flat_map(|(r, c)| matrix(r, c))) {
        let kernel = kernel_basis(&m);
        prop_assert_eq!(m.rank() + kernel.dim(), m.cols());
        for v in kernel.basis() {
            prop_assert!(m.mul_vec(v).iter().all(|x| *x == int(0)));
        }
    }

    #[test]
    fn grassmann_identity(a in sparse_subspace(6), b in sparse_subspace(6)) {
        let sum = a.sum(&b).unwrap();
        let meet = a.intersection(&b).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), a.dim() + b.dim());
        prop_assert!(meet.is_subspace_of(&a) && meet.is_subspace_of(&b));
    }

    #[test]
    fn intersection_matches_stacked_solve(a in sparse_subspace(5), b in sparse_subspace(5)) {
        prop_assert_eq!(a.intersection(&b).unwrap(), stacked_intersection(&a, &b));
    }

    #[test]
    fn quotient_kills_exactly_the_subspace(w in sparse_subspace(5), v in prop::collection::vec(-3i64..=3, 5)) {
        let q = quotient_map(5, &w).unwrap();
        prop_assert_eq!(q.target_dim(), 5 - w.dim());
        for b in w.basis() {
            prop_assert!(q.apply(b).iter().all(|x| *x == int(0)));
        }
        let v: Vec<Rational> = v.into_iter().map(int).collect();
        let back = q.lift(&q.apply(&v));
        let diff: Vec<Rational> = v.iter().zip(&back).map(|(x, y)| x - y).collect();
        prop_assert!(w.contains(&diff));
    }
}
