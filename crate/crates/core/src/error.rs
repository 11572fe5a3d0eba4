use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ring mismatch: {left} vs {right}")]
    ContextMismatch { left: String, right: String },

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("variable index {index} out of range for {n} variables")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("invalid ring: {0}")]
    InvalidContext(String),

    #[error("{op} is undefined for the {which} ideal")]
    DegenerateIdeal { op: &'static str, which: &'static str },

    #[error("ideal is not contained in m^2 (use the general verdict, which reduces linear generators)")]
    NotInMSquared,

    #[error("expected a ring in {expected} variables, found {found}")]
    WrongVariableCount { expected: usize, found: usize },

    #[error("invalid variable split: {0}")]
    InvalidSplit(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("matrix dimension mismatch: {0}")]
    MatrixShape(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("io error: {0}")]
    Io(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
