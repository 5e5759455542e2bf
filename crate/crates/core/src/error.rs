use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("tree must have at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for a tree with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("partition needs at least 3 vertices, got {0}")]
    PartitionTooSmall(usize),
    #[error("enumeration supports 1 <= n <= {max}, got {n}")]
    EnumerationCap { n: usize, max: usize },
    #[error("angle sector <{lo}, {hi}> violates the locator precondition: {reason}")]
    BadSector {
        lo: f64,
        hi: f64,
        reason: &'static str,
    },
    #[error("invalid angle range: {0}")]
    BadRange(String),
    #[error("child sizes sum to {sum}, parent subtree size is {parent}")]
    SizeMismatch { sum: usize, parent: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
