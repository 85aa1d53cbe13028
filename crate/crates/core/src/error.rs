use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph has no edges")]
    Edgeless,

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("{what}: budget {limit} exceeded (got {actual})")]
    BudgetExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("rational arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("invalid pattern `{text}`: {reason}")]
    InvalidPattern { text: String, reason: String },

    #[error("pattern has {size} vertices, search budget is {limit}")]
    PatternTooLarge { size: usize, limit: usize },

    #[error("verdict is polynomial, no hardness witness exists")]
    NotNpComplete,

    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("instance does not match claimed structure: {0}")]
    StructureMismatch(String),

    #[error("weighting is not uniform")]
    NonUniformWeights,

    #[error("wrong weighting variant: expected {expected}")]
    WrongVariant { expected: &'static str },

    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("rejection sampling gave up after {0} attempts")]
    RejectionExhausted(usize),

    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
