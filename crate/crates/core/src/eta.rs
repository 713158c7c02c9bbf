//! Dirichlet eta values `η(-m)` computed three independent ways.
//!
//! Setting `x = 0` in the coefficient identity gives `F(m, 0) = η(-m)` and
//! `G(j, 0) = j!`, so `η(-m) = Σ_j a_{m,j} j!`. This is checked against
//! `η(z) = (1 - 2^{1-z}) ζ(z)` and against the alternating Stirling sum
//!
//! ```text
//! η(1-n) = Σ_{k=1}^{n} (-1)^{k-1} (k-1)!/2^k S(n, k)
//! ```
//!
//! in the corrected form with signs `(-1)^{k-1}` and weights `(k-1)!/2^k`;
//! earlier printings of this formula carried small typos.

use serde::{Deserialize, Serialize};

use crate::combinat::{bernoulli_poly, factorial, stirling2};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::trimat::LowerTriMatrix;
use crate::zetadiff::{coeff_matrix, Route};

/// `ζ(-m) = -B_{m+1}(1) / (m+1)`. Using `B(1)` rather than `B` keeps
/// `ζ(0) = -1/2` without a special case.
pub fn zeta_neg(m: usize) -> Rational {
    -bernoulli_poly(m + 1, &Rational::one()) / Rational::from(m + 1)
}

pub fn eta_via_zeta(m: usize) -> Rational {
    (Rational::one() - Rational::pow2(m as i64 + 1)) * zeta_neg(m)
}

fn weighted_row_sum(coeffs: &LowerTriMatrix, m: usize) -> Rational {
    coeffs
        .row(m)
        .iter()
        .enumerate()
        .map(|(j, a)| a * Rational::from(factorial(j as u64)))
        .sum()
}

/// `Σ_j a_{m,j} j!` from row `m` of the coefficient matrix.
pub fn eta_via_coeff_row(m: usize) -> Rational {
    weighted_row_sum(&coeff_matrix(m, Route::Monomial).matrix, m)
}

/// `Σ_{j=0}^{m} (-1)^j / 2^{j+1} S(m+1, j+1) j!`.
pub fn eta_via_stirling2(m: usize) -> Rational {
    (0..=m)
        .map(|j| {
            let t = Rational::from(stirling2(m + 1, j as i64 + 1) * factorial(j as u64))
                * Rational::pow2(-(j as i64 + 1));
            if j % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum()
}

/// `η(1-n)` for `n ≥ 1` in the original `n`-indexed form.
///
/// # Panics
/// If `n` is zero.
pub fn eta_one_minus_n(n: usize) -> Rational {
    assert!(n >= 1, "eta_one_minus_n needs n >= 1");
    (1..=n)
        .map(|k| {
            let t = Rational::from(factorial(k as u64 - 1) * stirling2(n, k as i64))
                * Rational::pow2(-(k as i64));
            if k % 2 == 1 {
                t
            } else {
                -t
            }
        })
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtaTriple {
    pub m: usize,
    pub via_zeta: Rational,
    pub via_coeff_rows: Rational,
    pub via_stirling2: Rational,
}

impl EtaTriple {
    pub fn agree(&self) -> bool {
        self.via_zeta == self.via_coeff_rows && self.via_zeta == self.via_stirling2
    }
}

/// Export record: one value per `m` plus the agreement flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtaRecord {
    pub m: usize,
    pub eta: Rational,
    pub routes_agree: bool,
}

impl From<&EtaTriple> for EtaRecord {
    fn from(t: &EtaTriple) -> Self {
        EtaRecord {
            m: t.m,
            eta: t.via_zeta.clone(),
            routes_agree: t.agree(),
        }
    }
}

/// Triples for `0 ≤ m ≤ max_m`; the first disagreement is an error.
pub fn eta_cross_check(max_m: usize) -> Result<Vec<EtaTriple>> {
    // Rows of a lower-triangular product do not depend on the trailing
    // dimension, so one matrix serves every m.
    let coeffs = coeff_matrix(max_m, Route::Monomial).matrix;
    (0..=max_m)
        .map(|m| {
            let t = EtaTriple {
                m,
                via_zeta: eta_via_zeta(m),
                via_coeff_rows: weighted_row_sum(&coeffs, m),
                via_stirling2: eta_via_stirling2(m),
            };
            if t.agree() {
                Ok(t)
            } else {
                Err(Error::RouteDisagreement(Box::new(t)))
            }
        })
        .collect()
}
