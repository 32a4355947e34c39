use num_bigint::BigUint;
use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed cycle notation {text:?}: {reason}")]
    MalformedCycle { text: String, reason: String },

    #[error("point {point} is out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("a group needs at least one generator")]
    EmptyGenerators,

    #[error("group of order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: BigUint, cap: usize },

    #[error("exponent {k} is not coprime to element order {order}")]
    NotCoprime { k: i64, order: u64 },

    #[error("n = {n} is outside the supported range {min}..={max}")]
    BoundExceeded { n: usize, min: usize, max: usize },

    #[error("bad parameter: {0}")]
    BadParam(String),

    #[error("degree {degree} exceeds the construction limit {limit}")]
    DegreeTooLarge { degree: u128, limit: usize },

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("duplicate group id {0:?}")]
    DuplicateId(String),

    #[error("group {id:?}: expected order {expected}, computed {actual}")]
    OrderMismatch {
        id: String,
        expected: BigUint,
        actual: BigUint,
    },

    #[error("group {id:?}, generator {generator:?}: {source}")]
    Generator {
        id: String,
        generator: String,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
