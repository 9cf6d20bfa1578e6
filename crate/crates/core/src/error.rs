use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("series truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },

    #[error("logarithm needs a series with constant term 1")]
    NonUnitConstant,

    #[error("degree {n} is outside 1..={nmax}")]
    DegreeOutOfRange { n: usize, nmax: usize },

    #[error("powerful counts need a power s >= 2")]
    MissingPower,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("{k} does not divide {n}")]
    NotDivisor { k: usize, n: usize },

    #[error("{0} is prime, so it has no second divisor")]
    PrimeDegree(usize),

    #[error("q must exceed 1, got {0}")]
    FieldSizeTooSmall(String),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("enumeration too large: {what} needs {size_bits} bits of coefficient space (limit 24)")]
    SizeGuard { what: String, size_bits: f64 },

    #[error("field order {0} exceeds the supported maximum of 32")]
    FieldTooLarge(u64),

    #[error("degree overflow: product degree {deg} exceeds bound {bound}")]
    DegreeOverflow { deg: usize, bound: usize },

    #[error("unsupported oracle case: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}
