use thiserror::Error;

/// Errors raised by the exact arithmetic, series and determinant layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative argument: {0}")]
    NegativeArgument(String),
    #[error("not divisible: {0}")]
    NotDivisible(String),
    #[error("negative exponent after substitution: {0}")]
    NegativeExponent(String),
    #[error("polynomial is not palindromic of degree {0}")]
    NotPalindromic(usize),
    #[error("valuation of dividend is below valuation of divisor")]
    ValuationError,
    #[error("series constant term must be 1")]
    BadConstantTerm,
    #[error("denominator factor has no invertible constant term")]
    NonUnitConstant,
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("insufficient terms: need {needed}, have {have}")]
    InsufficientTerms { needed: usize, have: usize },
    #[error("series order exhausted: need {needed}, valid order {have}")]
    OrderExhausted { needed: usize, have: usize },
    #[error("series does not terminate: {0}")]
    NotPolynomial(String),
    #[error("degree mismatch: expected {expected}, got {actual}")]
    DegreeMismatch { expected: String, actual: String },
    #[error("odd power present in a polynomial required to be even")]
    OddTermInEvenPoly,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
}

pub type Result<T> = std::result::Result<T, Error>;
