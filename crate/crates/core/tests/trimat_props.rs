mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zetahyp_core::{LowerTriMatrix, Rational};

fn arb_entry() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=20).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn arb_invertible() -> impl Strategy<Value = LowerTriMatrix> {
    (1usize..=12).prop_flat_map(|dim| {
        let diag = prop::collection::vec(
            arb_entry().prop_filter("nonzero", |x| !x.is_zero()),
            dim,
        );
        let below = prop::collection::vec(arb_entry(), dim * (dim - 1) / 2);
        (diag, below).prop_map(move |(diag, below)| {
            let mut below = below.into_iter();
            LowerTriMatrix::from_fn(dim, |i, j| {
                if i == j {
                    diag[i].clone()
                } else {
                    below.next().unwrap()
                }
            })
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn series_matches_substitution(m in arb_invertible()) {
        let series = m.invert_series().unwrap();
        let subst = m.invert_substitution().unwrap();
        prop_assert_eq!(&series, &subst);
        prop_assert!(m.mul(&series).unwrap().is_identity());
        prop_assert!(series.mul(&m).unwrap().is_identity());
    }

    #[test]
    fn product_diagonal_is_elementwise(a in arb_invertible()) {
        let b = a.invert_substitution().unwrap().neg();
        let p = a.mul(&b).unwrap();
        for i in 0..a.dim() {
            prop_assert_eq!(p.get(i, i), a.get(i, i) * b.get(i, i));
        }
    }
}

#[test]
fn strict_lower_is_nilpotent() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for t in 0..100 {
        let dim = 1 + t % 12;
        let l = common::random_strict(&mut rng, dim);
        assert!(l.pow(dim as u32).is_zero(), "dim {dim}");
    }
}

#[test]
fn unit_lower_series_inverse() {
    // (I + L)(I + Σ_{k=1}^{n-1} (-1)^k L^k) = I
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for dim in 1..=10 {
        for _ in 0..5 {
            let l = common::random_strict(&mut rng, dim);
            let i = LowerTriMatrix::identity(dim);
            let mut series = i.clone();
            for k in 1..dim {
                let term = l.pow(k as u32);
                series = if k % 2 == 1 {
                    series.sub(&term).unwrap()
                } else {
                    series.add(&term).unwrap()
                };
            }
            assert!(i.add(&l).unwrap().mul(&series).unwrap().is_identity());
        }
    }
}

#[test]
fn split_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for dim in 1..=8 {
        let m = common::random_invertible(&mut rng, dim);
        let s = m.split_diag_strict();
        assert!(s.strict.is_strictly_lower());
        assert_eq!(s.recombine(), m);
    }
}
