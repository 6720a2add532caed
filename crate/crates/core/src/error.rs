use num_bigint::BigInt;
use thiserror::Error;

use crate::notation::ParseError;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{needed} coefficients requested but only {available} available")]
    InsufficientCoefficients { needed: usize, available: usize },
    #[error("invalid continued fraction: {0}")]
    InvalidCoefficients(String),
    #[error("{0} is a perfect square, its square root is rational")]
    PerfectSquare(BigInt),
    #[error("radicand must be positive, got {0}")]
    NonPositiveRadicand(BigInt),
    #[error("surd denominator must be nonzero")]
    ZeroSurdDenominator,
    #[error("no period found within {0} terms")]
    PeriodNotFoundWithinBudget(usize),
    #[error("x^2 - {n}*y^2 = -1 has no solution (period of sqrt({n}) is even)")]
    NoNegativeSolution { n: BigInt },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
