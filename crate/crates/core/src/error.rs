use thiserror::Error;

/// Violations of the structural invariants of [`Graph`](crate::Graph),
/// [`Hypergraph`](crate::Hypergraph) and [`RedBlueGraph`](crate::RedBlueGraph).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("hyperedge {edge:?} does not have exactly {r} distinct vertices")]
    WrongArity { edge: Vec<usize>, r: usize },
    #[error("duplicate hyperedge {0:?}")]
    DuplicateHyperedge(Vec<usize>),
    #[error("uniformity must be at least 2, got {0}")]
    Uniformity(usize),
    #[error("hypergraph is not connected")]
    Disconnected,
    #[error("{0} is not an edge")]
    MissingEdge(String),
}

/// A malformed text file, with the 1-based line number where parsing failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

impl FormatError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}
