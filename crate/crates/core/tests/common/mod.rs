#![allow(dead_code)]

use std::path::PathBuf;

use rand::Rng;
use zetahyp_core::{LowerTriMatrix, Rational};

pub fn reference_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/reference")
}

pub fn reference(name: &str) -> LowerTriMatrix {
    let path = reference_dir().join(name);
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("reading {}: {e}", path.display()));
    LowerTriMatrix::from_csv(&text).unwrap_or_else(|e| panic!("parsing {}: {e}", path.display()))
}

/// Entries where two matrices differ, as `(i, j, got, want)`.
pub fn diff(got: &LowerTriMatrix, want: &LowerTriMatrix) -> Vec<(usize, usize, Rational, Rational)> {
    assert_eq!(got.dim(), want.dim());
    let mut out = Vec::new();
    for i in 0..got.dim() {
        for j in 0..=i {
            let (g, w) = (got.get(i, j), want.get(i, j));
            if g != w {
                out.push((i, j, g, w));
            }
        }
    }
    out
}

/// Numerator and denominator each bounded by 20 in absolute value.
pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(-20i64..=20), rng.gen_range(1i64..=20)).unwrap()
}

pub fn small_nonzero<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let r = small_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn random_invertible<R: Rng>(rng: &mut R, dim: usize) -> LowerTriMatrix {
    LowerTriMatrix::from_fn(dim, |i, j| {
        if i == j {
            small_nonzero(rng)
        } else {
            small_rational(rng)
        }
    })
}

pub fn random_strict<R: Rng>(rng: &mut R, dim: usize) -> LowerTriMatrix {
    LowerTriMatrix::from_fn(dim, |i, j| {
        if i == j {
            Rational::zero()
        } else {
            small_rational(rng)
        }
    })
}

/// Independent Bernoulli numbers: coefficients of `z / (e^z - 1)` by exact
/// power-series reciprocal of `Σ z^k / (k+1)!`, times `n!`.
pub fn bernoulli_by_series(n_max: usize) -> Vec<Rational> {
    let mut fact = vec![Rational::one()];
    for k in 1..=n_max + 1 {
        let prev = fact[k - 1].clone();
        fact.push(prev * Rational::from(k));
    }
    let a: Vec<Rational> = (0..=n_max).map(|k| fact[k + 1].recip().unwrap()).collect();
    let mut c = vec![Rational::one()];
    for n in 1..=n_max {
        let s: Rational = (1..=n).map(|k| &a[k] * &c[n - k]).sum();
        c.push(-s);
    }
    c.iter().enumerate().map(|(n, cn)| cn * &fact[n]).collect()
}
