//! Dense univariate polynomials with rational coefficients, tagged with the
//! power basis they are written in.

use serde::{Deserialize, Serialize};

use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    /// `Σ c_j x^j`
    MonomialX,
    /// `Σ c_j (x+1)^j`
    ShiftedXPlus1,
}

impl Basis {
    /// The value of the basis variable at `x`.
    fn variable(self, x: &Rational) -> Rational {
        match self {
            Basis::MonomialX => x.clone(),
            Basis::ShiftedXPlus1 => x + Rational::one(),
        }
    }
}

/// Coefficients are indexed by degree with trailing zeros trimmed, so the
/// zero polynomial has no coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
    basis: Basis,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>, basis: Basis) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs, basis }
    }

    pub fn zero(basis: Basis) -> Self {
        Poly {
            coeffs: Vec::new(),
            basis,
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation in the polynomial's own basis.
    pub fn eval(&self, x: &Rational) -> Rational {
        let t = self.basis.variable(x);
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * &t + c)
    }

    /// Re-expresses the polynomial in `target` without changing its values.
    ///
    /// Moving from `x` to `x+1` is the Taylor shift `p(y - 1)`; the reverse is
    /// `p(y + 1)`. Both run as repeated synthetic division, O(n²).
    pub fn rebase(&self, target: Basis) -> Poly {
        if self.basis == target {
            return self.clone();
        }
        let shift = match target {
            Basis::ShiftedXPlus1 => -Rational::one(),
            Basis::MonomialX => Rational::one(),
        };
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let carry = &shift * &c[j + 1];
                c[j] += carry;
            }
        }
        Poly::new(c, target)
    }
}
