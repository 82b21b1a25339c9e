use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("modulus must have degree at least 1")]
    ConstantModulus,
    #[error("operands live in different rings")]
    MixedRings,
    #[error("degree precondition violated: {0}")]
    Degree(String),
    #[error("element is not invertible")]
    NotInvertible,
    #[error("ring has {size} elements but at least {needed} are required; use an extension or companion method")]
    FieldTooSmall { size: String, needed: String },
    #[error("no probable prime found in [{lambda}, 2*{lambda}] after {attempts} attempts")]
    PrimeSearchExhausted { lambda: String, attempts: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("exponent {0} exceeds 2^63 - 1")]
    ExponentOverflow(u128),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unsupported operation: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn degree(msg: impl Into<String>) -> Self {
        Error::Degree(msg.into())
    }
}
