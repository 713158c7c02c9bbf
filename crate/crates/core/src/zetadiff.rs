//! The Hurwitz zeta difference `F(m, x)`, the hypergeometric polynomials
//! `G(m, x)`, and the lower-triangular coefficient matrix `(a_{i,j})` with
//!
//! ```text
//! F(m, x) = Σ_{j=0}^{m} a_{m,j} G(j, x)
//! F(m, x) = 2^m [ζ(-m, (1+x)/2) - ζ(-m, (2+x)/2)]
//! G(m, x) = m! ₂F₁(-m, -x; 1; 2)
//! ```
//!
//! Both sides are polynomials of degree `m` in `x`. Writing them in powers of
//! `x` gives the matrices `A` (for `F`) and `B` (for `G`); writing them in
//! powers of `x+1` gives `A'` and `B'`. The coefficient matrix is then
//! `A B⁻¹ = A' B'⁻¹`, and [`Route`] selects which pair and which inverse is
//! used to compute it.
//!
//! `F` is defined through the Hurwitz zeta function only for `x > -1`, but its
//! closed form in Bernoulli polynomials is a polynomial, so [`eval_f`] accepts
//! any rational `x`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinat::{
    bernoulli_number, bernoulli_poly, binomial, factorial, rising_factorial, stirling1, stirling2,
};
use crate::poly::{Basis, Poly};
use crate::rational::Rational;
use crate::trimat::LowerTriMatrix;

/// Upper bound on `m` accepted by the command-line front end.
pub const DEFAULT_M_CAP: usize = 64;

/// Sample points used by pointwise verification unless overridden.
pub fn default_samples() -> Vec<Rational> {
    vec![
        Rational::zero(),
        Rational::pow2(-1),
        Rational::one(),
        Rational::from(2),
        Rational::new(7, 3).expect("nonzero"),
    ]
}

fn int(n: impl Into<num_bigint::BigInt>) -> Rational {
    Rational::from_integer(n)
}

/// `2^m [ζ(-m, (1+x)/2) - ζ(-m, (2+x)/2)]`, evaluated through
/// `ζ(-m, a) = -B_{m+1}(a) / (m+1)`.
pub fn eval_f(m: usize, x: &Rational) -> Rational {
    let half = Rational::pow2(-1);
    let hi = (Rational::from(2) + x) * &half;
    let lo = (Rational::one() + x) * &half;
    let diff = bernoulli_poly(m + 1, &hi) - bernoulli_poly(m + 1, &lo);
    diff * Rational::pow2(m as i64) / Rational::from(m + 1)
}

/// `m! Σ_{k=0}^{m} (-m)_k (-x)_k 2^k / (k!)²`, the terminating hypergeometric sum.
pub fn eval_g(m: usize, x: &Rational) -> Rational {
    let neg_m = -Rational::from(m);
    let neg_x = -x;
    let sum: Rational = (0..=m)
        .map(|k| {
            let kf = int(factorial(k as u64));
            rising_factorial(&neg_m, k) * rising_factorial(&neg_x, k) * Rational::pow2(k as i64)
                / (&kf * &kf)
        })
        .sum();
    sum * int(factorial(m as u64))
}

/// Row `i` holds the coefficients of `F(i, x)` in powers of `x`:
///
/// `α_{i,j} = 2^i/(i+1) Σ_{k=j}^{i} C(i+1,k+1) C(k+1,j) (2^{k-j+1} - 1)/2^{k+1} B_{i-k}`
pub fn build_matrix_a(m: usize) -> LowerTriMatrix {
    LowerTriMatrix::from_fn(m + 1, |i, j| {
        let sum: Rational = (j..=i)
            .map(|k| {
                let c = binomial(i as u64 + 1, k as i64 + 1) * binomial(k as u64 + 1, j as i64);
                let weight = (Rational::pow2((k - j + 1) as i64) - Rational::one())
                    * Rational::pow2(-(k as i64 + 1));
                int(c) * weight * bernoulli_number(i - k)
            })
            .sum();
        sum * Rational::pow2(i as i64) / Rational::from(i + 1)
    })
}

/// Row `i` holds the coefficients of `G(i, x)` in powers of `x`:
///
/// `β_{i,j} = Σ_{k=j}^{i} 2^k (i-k)! C(i,k)² s(k,j)`
pub fn build_matrix_b(m: usize) -> LowerTriMatrix {
    build_g_matrix(m, |k, j| stirling1(k, j as i64))
}

/// Row `i` holds the coefficients of `F(i, x)` in powers of `x+1`:
///
/// `λ_{i,j} = Σ_{k=0}^{i-j} C(i,k) 2^{k-1} B_k/(i-k+1) C(i-k+1,j)`
pub fn build_matrix_frak_a(m: usize) -> LowerTriMatrix {
    LowerTriMatrix::from_fn(m + 1, |i, j| {
        (0..=i - j)
            .map(|k| {
                let c = binomial(i as u64, k as i64) * binomial((i - k) as u64 + 1, j as i64);
                int(c) * Rational::pow2(k as i64 - 1) * bernoulli_number(k)
                    / Rational::from(i - k + 1)
            })
            .sum()
    })
}

/// Row `i` holds the coefficients of `G(i, x)` in powers of `x+1`:
///
/// `μ_{i,j} = Σ_{k=j}^{i} 2^k (i-k)! C(i,k)² s(k+1,j+1)`
pub fn build_matrix_frak_b(m: usize) -> LowerTriMatrix {
    build_g_matrix(m, |k, j| stirling1(k + 1, j as i64 + 1))
}

fn build_g_matrix(m: usize, s: impl Fn(usize, usize) -> num_bigint::BigInt) -> LowerTriMatrix {
    LowerTriMatrix::from_fn(m + 1, |i, j| {
        let total: num_bigint::BigInt = (j..=i)
            .map(|k| {
                let c = binomial(i as u64, k as i64);
                (num_bigint::BigInt::from(1) << k) * factorial((i - k) as u64) * &c * &c * s(k, j)
            })
            .sum();
        int(total)
    })
}

/// How the coefficient matrix is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// `A B⁻¹`, inverse by forward substitution.
    Monomial,
    /// `A' B'⁻¹`, inverse by forward substitution.
    Shifted,
    /// `A [I + Σ (-1)^k (D⁻¹L)^k] D⁻¹` with `B = D + L`.
    MonomialSeries,
    /// Same series inverse applied to `B' = D + L'`.
    ShiftedSeries,
}

impl Route {
    pub const ALL: [Route; 4] = [
        Route::Monomial,
        Route::Shifted,
        Route::MonomialSeries,
        Route::ShiftedSeries,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Route::Monomial => "monomial",
            Route::Shifted => "shifted",
            Route::MonomialSeries => "monomial-series",
            Route::ShiftedSeries => "shifted-series",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Route::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| format!("unknown route {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffReport {
    pub m: usize,
    pub route: Route,
    pub matrix: LowerTriMatrix,
}

/// The `(m+1) × (m+1)` coefficient matrix `(a_{i,j})` by the given route.
pub fn coeff_matrix(m: usize, route: Route) -> CoeffReport {
    // B and B' have diagonal 2^i, so both inverses always exist.
    let matrix = match route {
        Route::Monomial => build_matrix_a(m).mul(&build_matrix_b(m).invert_substitution().unwrap()),
        Route::Shifted => {
            build_matrix_frak_a(m).mul(&build_matrix_frak_b(m).invert_substitution().unwrap())
        }
        Route::MonomialSeries => build_matrix_a(m).mul(&build_matrix_b(m).invert_series().unwrap()),
        Route::ShiftedSeries => {
            build_matrix_frak_a(m).mul(&build_matrix_frak_b(m).invert_series().unwrap())
        }
    }
    .expect("dimensions agree");
    CoeffReport { m, route, matrix }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualViolation {
    pub row: usize,
    pub sample: Rational,
    pub residual: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub m: usize,
    pub samples: Vec<Rational>,
    pub pass: bool,
    pub violations: Vec<ResidualViolation>,
}

/// Checks `F(i, x) - Σ_j a_{i,j} G(j, x) = 0` for every row of the coefficient
/// matrix and every sample, with `F` and `G` taken from the direct evaluators.
pub fn verify_combination(m: usize, samples: &[Rational]) -> VerificationReport {
    verify_combination_with(&coeff_matrix(m, Route::Monomial).matrix, samples)
}

/// As [`verify_combination`] but against a caller-supplied coefficient matrix.
pub fn verify_combination_with(coeffs: &LowerTriMatrix, samples: &[Rational]) -> VerificationReport {
    let m = coeffs.dim() - 1;
    let mut violations = Vec::new();
    for x in samples {
        let g: Vec<Rational> = (0..=m).map(|j| eval_g(j, x)).collect();
        for i in 0..=m {
            let combo: Rational = coeffs.row(i).iter().zip(&g).map(|(a, g)| a * g).sum();
            let residual = eval_f(i, x) - combo;
            if !residual.is_zero() {
                violations.push(ResidualViolation {
                    row: i,
                    sample: x.clone(),
                    residual,
                });
            }
        }
    }
    VerificationReport {
        m,
        samples: samples.to_vec(),
        pass: violations.is_empty(),
        violations,
    }
}

/// Row `i` of `matrix` as a polynomial in `basis`.
pub fn row_poly(matrix: &LowerTriMatrix, i: usize, basis: Basis) -> Poly {
    Poly::new(matrix.row(i).to_vec(), basis)
}

/// The four expansion matrices for one `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansions {
    pub a: LowerTriMatrix,
    pub b: LowerTriMatrix,
    pub frak_a: LowerTriMatrix,
    pub frak_b: LowerTriMatrix,
}

impl Expansions {
    pub fn build(m: usize) -> Self {
        Expansions {
            a: build_matrix_a(m),
            b: build_matrix_b(m),
            frak_a: build_matrix_frak_a(m),
            frak_b: build_matrix_frak_b(m),
        }
    }
}

/// `2m + 3` distinct points, integers and thirds on both sides of zero.
fn poly_sample_points(m: usize) -> Vec<Rational> {
    (0..2 * m as i64 + 3)
        .map(|k| Rational::new(k - 3, 3).expect("nonzero") - Rational::from(m as i64 / 2))
        .collect()
}

/// Ties the closed-form matrix entries to the direct evaluators: rows of `A`
/// and `B` in powers of `x`, rows of `A'` and `B'` in powers of `x+1`, must
/// reproduce `F` and `G` pointwise, and rebasing `A'` rows must give `A` rows.
pub fn verify_polynomial_forms(m: usize) -> bool {
    verify_polynomial_forms_with(&Expansions::build(m))
}

pub fn verify_polynomial_forms_with(ex: &Expansions) -> bool {
    let dim = ex.a.dim();
    if [&ex.b, &ex.frak_a, &ex.frak_b].iter().any(|x| x.dim() != dim) {
        return false;
    }
    let m = dim - 1;
    let points = poly_sample_points(m);
    for i in 0..=m {
        let fa = row_poly(&ex.a, i, Basis::MonomialX);
        let gb = row_poly(&ex.b, i, Basis::MonomialX);
        let fs = row_poly(&ex.frak_a, i, Basis::ShiftedXPlus1);
        let gs = row_poly(&ex.frak_b, i, Basis::ShiftedXPlus1);
        for x in &points {
            let f = eval_f(i, x);
            let g = eval_g(i, x);
            if fa.eval(x) != f || fs.eval(x) != f || gb.eval(x) != g || gs.eval(x) != g {
                return false;
            }
        }
        if fs.rebase(Basis::MonomialX) != fa || gs.rebase(Basis::MonomialX) != gb {
            return false;
        }
    }
    true
}

/// Expected sign of a below-diagonal coefficient `a_{i,j}`, by `(i - j) mod 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    Zero,
    Negative,
    Positive,
}

impl Expectation {
    pub fn for_offset(i_minus_j: usize) -> Self {
        match i_minus_j % 4 {
            1 | 3 => Expectation::Zero,
            2 => Expectation::Negative,
            _ => Expectation::Positive,
        }
    }

    pub fn holds(self, value: &Rational) -> bool {
        match self {
            Expectation::Zero => value.is_zero(),
            Expectation::Negative => value.is_negative(),
            Expectation::Positive => value.is_positive(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignViolation {
    pub i: usize,
    pub j: usize,
    pub value: Rational,
    pub expected: Expectation,
}

/// Result of scanning the conjectured sign pattern. An empty violation list
/// means the pattern held on every strictly-below-diagonal entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignPatternFinding {
    pub max_m: usize,
    pub violations: Vec<SignViolation>,
}

impl SignPatternFinding {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `a_{i,j} = 0` for odd `i - j`, `< 0` for `i - j ≡ 2 (mod 4)` and
/// `> 0` for `i - j ≡ 0 (mod 4)`, over the matrix of dimension `max_m + 1`.
pub fn scan_sign_pattern(max_m: usize) -> SignPatternFinding {
    scan_sign_pattern_in(&coeff_matrix(max_m, Route::Monomial).matrix)
}

pub fn scan_sign_pattern_in(coeffs: &LowerTriMatrix) -> SignPatternFinding {
    let mut violations = Vec::new();
    for i in 0..coeffs.dim() {
        for (j, value) in coeffs.row(i)[..i].iter().enumerate() {
            let expected = Expectation::for_offset(i - j);
            if !expected.holds(value) {
                violations.push(SignViolation {
                    i,
                    j,
                    value: value.clone(),
                    expected,
                });
            }
        }
    }
    SignPatternFinding {
        max_m: coeffs.dim() - 1,
        violations,
    }
}

/// The matrix `((-1)^j S(i+1, j+1) / 2^{j+1})`, which has the same weighted
/// row sums `Σ_j (·) j!` as the coefficient matrix but different entries.
pub fn stirling2_candidate_matrix(m: usize) -> LowerTriMatrix {
    LowerTriMatrix::from_fn(m + 1, |i, j| {
        let v = int(stirling2(i + 1, j as i64 + 1)) * Rational::pow2(-(j as i64 + 1));
        if j % 2 == 0 {
            v
        } else {
            -v
        }
    })
}

/// First `(i, j)` in row-major order where the coefficient matrix and
/// [`stirling2_candidate_matrix`] differ.
pub fn compare_stirling2_matrix(m: usize) -> Option<(usize, usize)> {
    let a = coeff_matrix(m, Route::Monomial).matrix;
    let c = stirling2_candidate_matrix(m);
    (0..=m)
        .flat_map(|i| (0..=i).map(move |j| (i, j)))
        .find(|&(i, j)| a.row(i)[j] != c.row(i)[j])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn f_small_values() {
        for x in [q(0, 1), q(17, 1), q(-5, 3), q(1, 2)] {
            assert_eq!(eval_f(0, &x), q(1, 2));
        }
        assert_eq!(eval_f(1, &Rational::zero()), q(1, 4));
        assert_eq!(eval_f(2, &Rational::zero()), Rational::zero());
    }

    #[test]
    fn g_small_values() {
        assert_eq!(eval_g(0, &q(9, 4)), Rational::one());
        assert_eq!(eval_g(1, &q(3, 1)), q(7, 1));
        assert_eq!(eval_g(1, &Rational::zero()), Rational::one());
        for m in 0..=10 {
            assert_eq!(eval_g(m, &Rational::zero()), int(factorial(m as u64)));
        }
    }

    #[test]
    fn diagonals() {
        let ex = Expansions::build(12);
        for i in 0..=12 {
            assert_eq!(ex.a.get(i, i), q(1, 2));
            assert_eq!(ex.frak_a.get(i, i), q(1, 2));
            assert_eq!(ex.b.get(i, i), Rational::pow2(i as i64));
            assert_eq!(ex.frak_b.get(i, i), Rational::pow2(i as i64));
        }
    }

    #[test]
    fn spot_entries_m9() {
        let ex = Expansions::build(9);
        assert_eq!(ex.a.get(0, 0), q(1, 2));
        assert_eq!(ex.a.get(3, 0), q(-1, 8));
        assert_eq!(ex.a.get(9, 2), q(-153, 4));
        let row3: Vec<_> = ex.b.row(3).to_vec();
        assert_eq!(row3, vec![q(6, 1), q(16, 1), q(12, 1), q(8, 1)]);
        assert_eq!(ex.b.get(9, 0), q(362880, 1));
        assert_eq!(ex.frak_a.get(3, 0), q(1, 8));
        assert_eq!(ex.frak_a.get(9, 2), q(153, 4));
        let row3: Vec<_> = ex.frak_b.row(3).to_vec();
        assert_eq!(row3, vec![q(-6, 1), q(16, 1), q(-12, 1), q(8, 1)]);
        assert_eq!(ex.frak_b.get(9, 0), q(-362880, 1));
    }

    #[test]
    fn coefficient_spots() {
        let a = coeff_matrix(9, Route::Monomial).matrix;
        assert_eq!(a.get(9, 1), q(691, 4));
        assert_eq!(a.get(8, 2), q(-55, 1));
        assert_eq!(coeff_matrix(0, Route::ShiftedSeries).matrix.row(0), &[q(1, 2)]);
    }

    #[test]
    fn combination_small_cases() {
        assert!(verify_combination(0, &[q(17, 1)]).pass);
        assert!(verify_combination(1, &[Rational::zero()]).pass);
        let r = verify_combination(9, &default_samples());
        assert!(r.pass, "{:?}", r.violations);
    }

    #[test]
    fn combination_catches_a_bad_matrix() {
        let mut rows: Vec<Vec<Rational>> =
            coeff_matrix(3, Route::Monomial).matrix.rows().map(<[_]>::to_vec).collect();
        rows[2][0] = q(1, 4);
        let bad = LowerTriMatrix::from_rows(rows).unwrap();
        let r = verify_combination_with(&bad, &[Rational::zero(), Rational::one()]);
        assert!(!r.pass);
        assert!(r.violations.iter().all(|v| v.row == 2));
        assert_eq!(r.violations[0].residual, q(-1, 2));
    }

    #[test]
    fn polynomial_forms_small() {
        assert!(verify_polynomial_forms(0));
        assert!(verify_polynomial_forms(3));
    }

    #[test]
    fn polynomial_forms_reject_swapped_matrices() {
        let mut ex = Expansions::build(3);
        std::mem::swap(&mut ex.a, &mut ex.frak_a);
        assert!(!verify_polynomial_forms_with(&ex));
    }

    #[test]
    fn sign_pattern_classes() {
        assert_eq!(Expectation::for_offset(1), Expectation::Zero);
        assert_eq!(Expectation::for_offset(2), Expectation::Negative);
        assert_eq!(Expectation::for_offset(4), Expectation::Positive);
        assert_eq!(Expectation::for_offset(7), Expectation::Zero);
        assert!(scan_sign_pattern(0).holds());
        assert!(scan_sign_pattern(9).holds());
    }

    #[test]
    fn stirling2_candidate_differs() {
        assert_eq!(compare_stirling2_matrix(0), None);
        // Row 1 already differs: a_{1,0} = 0 against S(2,1)/2 = 1/2.
        assert_eq!(compare_stirling2_matrix(2), Some((1, 0)));
        let c = stirling2_candidate_matrix(2);
        assert_eq!(c.get(2, 0), q(1, 2));
        assert_eq!(coeff_matrix(2, Route::Monomial).matrix.get(2, 0), q(-1, 4));
        assert!(compare_stirling2_matrix(9).is_some());
    }

    #[test]
    fn route_names_round_trip() {
        for r in Route::ALL {
            assert_eq!(r.name().parse::<Route>().unwrap(), r);
            assert_eq!(serde_json::to_string(&r).unwrap(), format!("\"{}\"", r.name()));
        }
        assert!("diagonal".parse::<Route>().is_err());
    }

    #[test]
    fn report_json_shape() {
        let r = coeff_matrix(1, Route::Shifted);
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(
            s,
            r#"{"m":1,"route":"shifted","matrix":{"dim":2,"rows":[["1/2"],["0","1/4"]]}}"#
        );
        assert_eq!(serde_json::from_str::<CoeffReport>(&s).unwrap(), r);
    }
}
