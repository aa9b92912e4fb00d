use thiserror::Error;

/// Every fallible operation in the crate reports one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree {degree} exceeds the degree bound {bound}")]
    Capacity { degree: usize, bound: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },
    #[error("truncation {got} is too short, need at least {need}")]
    TruncationTooShort { need: usize, got: usize },
    #[error("invalid p-typical grid: {0}")]
    InvalidGrid(String),
    #[error("parameter mismatch: {0}")]
    ParameterMismatch(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("parameter {name} = {value} is negative")]
    NegativeParameter { name: String, value: String },
    #[error("minor order {order} exceeds the truncation {n}")]
    OrderTooLarge { order: usize, n: usize },
    #[error("singular system: {0}")]
    Singular(String),
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("coefficients must be integers: {0}")]
    NotIntegral(String),
}

pub type Result<T> = std::result::Result<T, Error>;
