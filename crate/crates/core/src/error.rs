use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a hypergraph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("edge reference {index} out of range ({edge_count} edges)")]
    EdgeOutOfRange { index: usize, edge_count: usize },

    #[error("invalid edge {edge:?}: {reason}")]
    InvalidEdge { edge: Vec<usize>, reason: &'static str },

    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<usize>),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("hypergraph is not connected")]
    NotConnected,

    #[error("hypergraph is not {expected}-critical")]
    NotCritical { expected: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("search guard exceeded: {0}")]
    GuardExceeded(String),

    /// A structural statement that must hold for valid input did not hold.
    /// Either the input violated a precondition that could not be checked
    /// cheaply, or there is a bug.
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
