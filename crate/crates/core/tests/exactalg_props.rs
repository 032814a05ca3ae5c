mod common;

use hcobord::exactalg::{cokernel, rational_inverse, smith_normal_form, IntMatrix};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(-bound..=bound, c), r)
            .prop_map(move |rows| IntMatrix::from_rows(&rows).resize_cols(c))
    })
}

trait ResizeCols {
    fn resize_cols(self, c: usize) -> IntMatrix;
}

impl ResizeCols for IntMatrix {
    // `from_rows` cannot infer the width of a matrix with no rows.
    fn resize_cols(self, c: usize) -> IntMatrix {
        if self.rows() == 0 {
            IntMatrix::zeros(0, c)
        } else {
            self
        }
    }
}

/// Unimodular matrix built from elementary row operations.
fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0..n.max(1), 0..n.max(1), -3i64..=3, any::<bool>()), 0..12).prop_map(
        move |ops| {
            let mut m = IntMatrix::identity(n);
            for (i, j, c, swap) in ops {
                if n == 0 {
                    break;
                }
                let e = if swap {
                    let mut e = IntMatrix::identity(n);
                    e.set(i, i, BigInt::zero());
                    e.set(j, j, BigInt::zero());
                    e.set(i, j, BigInt::one());
                    e.set(j, i, BigInt::one());
                    if i == j {
                        e.set(i, i, -BigInt::one());
                    }
                    e
                } else if i != j {
                    let mut e = IntMatrix::identity(n);
                    e.set(i, j, BigInt::from(c));
                    e
                } else {
                    continue;
                };
                m = e.mul(&m).unwrap();
            }
            m
        },
    )
}

proptest! {
    #[test]
    fn snf_factorization(a in matrix(6, 20)) {
        let snf = smith_normal_form(&a);
        let uav = snf.u.mul(&a).unwrap().mul(&snf.v).unwrap();
        prop_assert_eq!(&uav, &snf.d);
        if a.rows() > 0 {
            prop_assert!(snf.u.determinant().unwrap().abs().is_one());
        }
        if a.cols() > 0 {
            prop_assert!(snf.v.determinant().unwrap().abs().is_one());
        }
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                if i != j {
                    prop_assert!(snf.d.get(i, j).is_zero());
                }
            }
        }
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            prop_assert!(!w[0].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
    }

    #[test]
    fn snf_matches_determinantal_divisors(a in matrix(4, 9)) {
        prop_assert_eq!(smith_normal_form(&a).diagonal(), common::invariant_factors_oracle(&a));
    }

    #[test]
    fn cokernel_is_invariant_under_unimodular_change(
        (a, p, q) in (0usize..=4, 0usize..=4).prop_flat_map(|(r, c)| {
            (
                prop::collection::vec(prop::collection::vec(-8i64..=8, c), r)
                    .prop_map(move |rows| IntMatrix::from_rows(&rows).resize_cols(c)),
                unimodular(r),
                unimodular(c),
            )
        })
    ) {
        let b = p.mul(&a).unwrap().mul(&q).unwrap();
        prop_assert!(cokernel(&a).is_isomorphic(&cokernel(&b)));
    }

    #[test]
    fn cokernel_order_is_determinant(rows in (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(-6i64..=6, n), n)
    })) {
        let a = IntMatrix::from_rows(&rows);
        let det = a.determinant().unwrap();
        let g = cokernel(&a);
        if det.is_zero() {
            prop_assert!(g.rank() > 0);
        } else {
            prop_assert_eq!(g.rank(), 0);
            prop_assert_eq!(g.torsion_order(), det.abs());
        }
    }

    #[test]
    fn rational_inverse_is_two_sided(rows in (1usize..=5).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(-7i64..=7, n), n)
    })) {
        let a = IntMatrix::from_rows(&rows);
        match rational_inverse(&a) {
            Ok(inv) => {
                let ar = a.to_rational();
                prop_assert!(ar.mul(&inv).unwrap().is_identity());
                prop_assert!(inv.mul(&ar).unwrap().is_identity());
            }
            Err(_) => prop_assert!(a.determinant().unwrap().is_zero()),
        }
    }

    #[test]
    fn group_json_roundtrip(a in matrix(4, 9)) {
        let g = cokernel(&a).torsion_subgroup().direct_sum(&cokernel(&a));
        let text = serde_json::to_string(&g).unwrap();
        let back: hcobord::exactalg::FgAbelianGroup = serde_json::from_str(&text).unwrap();
        prop_assert!(back.is_isomorphic(&g));
    }
}
