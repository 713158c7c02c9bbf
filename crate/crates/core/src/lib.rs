//! Exact rational machinery for writing the Hurwitz zeta difference
//!
//! ```text
//! F(m, x) = 2^m [ζ(-m, (1+x)/2) - ζ(-m, (2+x)/2)]
//! ```
//!
//! as a linear combination of `G(j, x) = j! ₂F₁(-j, -x; 1; 2)`.
//!
//! - [`rational`], [`poly`]: exact scalars and dense polynomials in `x` or `x+1`
//! - [`combinat`]: binomials, Bernoulli and Stirling numbers, Pochhammer symbols
//! - [`trimat`]: packed lower-triangular matrices with two independent inverses
//! - [`zetadiff`]: the expansion matrices, the coefficient matrix and its checks
//! - [`eta`]: `η(-m)` by three routes

pub mod combinat;
pub mod error;
pub mod eta;
pub mod poly;
pub mod rational;
pub mod trimat;
pub mod zetadiff;

pub use error::{Error, Result};
pub use eta::{eta_cross_check, EtaRecord, EtaTriple};
pub use poly::{Basis, Poly};
pub use rational::Rational;
pub use trimat::{DiagPlusStrictSplit, LowerTriMatrix};
pub use zetadiff::{
    coeff_matrix, scan_sign_pattern, verify_combination, verify_polynomial_forms, CoeffReport,
    Expansions, Route, SignPatternFinding, VerificationReport,
};
