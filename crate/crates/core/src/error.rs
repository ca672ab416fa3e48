use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("voter count {0} outside supported range 1..=24")]
    VoterCount(usize),

    #[error("operation requires a boolean game (v(empty)=0, v(N)=1)")]
    NotBoolean,

    #[error("operation requires a simple (monotone) game")]
    NotSimple,

    #[error("operation requires a complete game in the canonical voter order")]
    NotComplete,

    #[error("cannot normalize a power vector with total 0")]
    NormalizationOfZero,

    #[error("index {0} is not admissible here: {1}")]
    UnsupportedIndex(String, String),

    #[error("{0}")]
    InvalidArgument(String),

    #[error("enumeration for n={0} in class {1} not supported")]
    EnumerationLimit(usize, String),

    #[error("linear program is unbounded")]
    Unbounded,

    #[error("malformed LP file: {0}")]
    LpParse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
