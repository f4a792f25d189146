use thiserror::Error;

/// Error raised while parsing the edge-list text format.
///
/// `line` is 1-based and points at the offending input line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(line: usize, msg: impl Into<String>) -> Self {
        ParseError {
            line,
            msg: msg.into(),
        }
    }
}

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("k must be at least 2 (got {0})")]
    InvalidK(usize),

    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("{u}-{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },

    #[error("graph on {n} vertices exceeds the exact-search limit {limit}")]
    ExactLimitExceeded { n: usize, limit: usize },

    #[error("search budget exhausted before the exact answer was determined")]
    BudgetExhausted,

    #[error("invalid packing: {0}")]
    InvalidPacking(String),

    #[error("invalid rotation plan: {0}")]
    InvalidPlan(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("exhaustive enumeration is not feasible for n = {n} (max {max})")]
    EnumerationTooLarge { n: usize, max: usize },

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
