//! Randomized invariants for the arithmetic kernels: Q/Z group laws, the
//! twist action on zeta factorizations, integer-form round trips, series
//! expansion against a naive convolution oracle, and Smith normal form.

mod common;

use common::naive_series;
use proptest::prelude::*;
use saito_core::abelian::{smith_decomposition, IntMat, QZ};
use saito_core::zeta::{IntegerZeta, TwistedZeta};

fn qz() -> impl Strategy<Value = QZ> {
    (0i64..60, 1i64..=12).prop_map(|(n, d)| QZ::new(n, d))
}

fn integer_zeta_factors() -> impl Strategy<Value = Vec<(u64, i64)>> {
    prop::collection::btree_map(1u64..=12, -4i64..=4, 0..5)
        .prop_map(|m| m.into_iter().filter(|&(_, e)| e != 0).collect())
}

fn integer_zeta(factors: &[(u64, i64)]) -> IntegerZeta {
    factors
        .iter()
        .fold(IntegerZeta::one(), |z, &(n, e)| {
            z.mul(&IntegerZeta::from_factor(n, e))
        })
}

fn square_matrix(n: usize) -> impl Strategy<Value = IntMat> {
    prop::collection::vec(prop::collection::vec(-6i128..=6, n), n)
        .prop_map(IntMat::from_rows)
}

proptest! {
    #[test]
    fn qz_is_an_abelian_group(a in qz(), b in qz(), c in qz()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.add(&a.neg()), QZ::ZERO);
        prop_assert_eq!(a.scale(a.order() as i64), QZ::ZERO);
        prop_assert_eq!(a.sub(&b).add(&b), a);
    }

    #[test]
    fn twist_is_a_group_action(factors in prop::collection::vec((qz(), 1u64..4, -3i64..=3), 0..4),
                               b1 in qz(), b2 in qz()) {
        let mut z = TwistedZeta::one();
        for (c, k, e) in factors {
            z.mul_factor(c, k, e);
        }
        prop_assert_eq!(z.twist(QZ::ZERO), z.clone());
        prop_assert_eq!(z.twist(b1).twist(b2), z.twist(b1.add(&b2)));
        prop_assert_eq!(z.twist(b1).twist(b1.neg()), z);
    }

    #[test]
    fn split_then_integer_form_roundtrips(factors in integer_zeta_factors()) {
        let z = integer_zeta(&factors);
        let back = z.split().to_integer_form();
        prop_assert_eq!(back.ok(), Some(z));
    }

    #[test]
    fn series_matches_naive_convolution(factors in integer_zeta_factors()) {
        let z = integer_zeta(&factors);
        prop_assert_eq!(z.series(16), naive_series(&factors, 16));
    }

    #[test]
    fn series_of_products_is_a_product_of_series(a in integer_zeta_factors(),
                                                 b in integer_zeta_factors()) {
        let combined: Vec<(u64, i64)> = a.iter().chain(b.iter()).copied().collect();
        let z = integer_zeta(&a).mul(&integer_zeta(&b));
        prop_assert_eq!(z.series(12), naive_series(&combined, 12));
    }

    #[test]
    fn smith_form_diagonalizes(m in (1usize..=3).prop_flat_map(square_matrix)) {
        let s = smith_decomposition(&m);
        prop_assert_eq!(s.p.mul(&m).mul(&s.q), s.d.clone());
        prop_assert_eq!(s.p.mul(&s.p_inv), IntMat::identity(m.rows()));
        prop_assert_eq!(s.q.mul(&s.q_inv), IntMat::identity(m.cols()));
        prop_assert_eq!(s.d.det().abs(), m.det().abs());
        let diag = s.diagonal();
        for i in 0..diag.len() {
            for j in 0..diag.len() {
                if i != j {
                    prop_assert_eq!(s.d[(i, j)], 0);
                }
            }
            if i + 1 < diag.len() && diag[i + 1] != 0 {
                prop_assert!(diag[i] != 0 && diag[i + 1] % diag[i] == 0,
                             "diagonal {:?} is not a divisibility chain", diag);
            }
        }
    }
}
