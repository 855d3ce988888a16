use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at byte {offset}: expected {expected}")]
    Parse { offset: usize, expected: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("bad leg positions: {0}")]
    BadPositions(String),

    #[error("singular matrix")]
    SingularMatrix,

    #[error("root order {root_order} is not divisible by {n}")]
    RootOrderIncompatible { root_order: u32, n: usize },

    #[error("unknown generator: {0}")]
    UnknownGenerator(String),

    #[error("antisymmetrizer image is not proportional to the antisymmetrizer: {0}")]
    NotProportional(String),

    #[error("word of length {len} exceeds the evaluation bound {bound}")]
    WordTooLong { len: usize, bound: usize },

    #[error("n = {0} is too large for the monomial oracle")]
    TooLarge(usize),

    #[error("quantum determinant is zero")]
    ZeroQdet,

    #[error("dimension must be even and positive, got {0}")]
    OddDimension(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
