use thiserror::Error;

use crate::eta::EtaTriple;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },

    #[error("matrix dimension must be at least 1")]
    EmptyMatrix,

    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("zero diagonal entry at index {0}")]
    SingularDiagonal(usize),

    #[error(
        "eta routes disagree at m = {}: zeta {}, coefficient row {}, stirling {}",
        .0.m, .0.via_zeta, .0.via_coeff_rows, .0.via_stirling2
    )]
    RouteDisagreement(Box<EtaTriple>),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
