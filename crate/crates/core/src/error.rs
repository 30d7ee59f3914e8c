use thiserror::Error;

/// Errors reported by validation and the persistence engines.
#[derive(Debug, Error, PartialEq)]
pub enum Error {
    #[error("vertex or edge count is negative")]
    NegativeCount,
    #[error("edge {edge} endpoint {endpoint} out of range (n = {n})")]
    EndpointOutOfRange {
        edge: usize,
        endpoint: usize,
        n: usize,
    },
    #[error("duplicate edge id {0}")]
    DuplicateEdgeId(usize),
    #[error("missing value for {0}")]
    MissingValue(String),
    #[error("value for {0} is not a finite number")]
    NonFiniteValue(String),
    #[error("edge {0} has a value below one of its endpoints")]
    MonotonicityViolation(usize),
    #[error("filtration is not vertex-based (edge {0} differs from its endpoint maximum)")]
    NotVertexBased(usize),
    #[error("not a permutation of 0..{expected}: {reason}")]
    NotAPermutation { expected: usize, reason: String },
    #[error("schedule contracts edge {0} before both endpoints")]
    EdgeBeforeEndpoint(usize),
    #[error("contraction killed no cycle; schedule or engine state is inconsistent")]
    StackUnderflow,
    #[error("schedule includes complex {0} twice")]
    DuplicateInclude(usize),
    #[error("schedule contracts complex {0} before including it")]
    ContractBeforeInclude(usize),
    #[error("schedule refers to unknown complex index {0} (have {1})")]
    UnknownIndex(usize, usize),
    #[error("schedule contracts complex {0} twice")]
    DuplicateContract(usize),
    #[error("diagram has no function-time values")]
    MissingFunctionTime,
    #[error("diagrams must each have exactly one essential pair in dimension 0 (got {0} and {1})")]
    EssentialCountMismatch(usize, usize),
    #[error("function time is undefined for mode {0}")]
    FunctionTimeUndefined(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Json(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
