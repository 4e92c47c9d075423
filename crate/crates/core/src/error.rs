use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("truncation order {order} is too low, at least {required} is needed")]
    TruncationTooLow { order: usize, required: usize },

    #[error("operator series truncation orders differ ({left} vs {right})")]
    TruncationMismatch { left: usize, right: usize },

    #[error("coefficient of z^{index} depends on x")]
    NotXFree { index: usize },

    #[error("operator series has a zero constant term and is not invertible")]
    NotInvertible,

    #[error("term x^{power_of_x} survives with odd exponent n^-{exponent} after pairing")]
    OddExponentSurvives { power_of_x: usize, exponent: u32 },

    #[error("coefficient comparison is inconsistent: {0}")]
    InconsistentSystem(String),

    #[error("coefficient comparison is not triangular: {0}")]
    NonTriangular(String),

    #[error("residual for g = x^{m} is not constant: {residual}")]
    ResidualNonZero { m: usize, residual: String },

    #[error("z0 = {z0} is within 1e-6 of the pole at 0")]
    PoleTooClose { z0: f64 },

    #[error("|z0| = {} must be below 2*pi", z0.abs())]
    OutsideConvergence { z0: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
