use thiserror::Error;

/// Errors produced by graph construction, distance computation and the
/// closed-form evaluators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{0}")]
    InvalidParameter(String),
    #[error("graph is disconnected: vertex {target} is unreachable from {origin}")]
    Disconnected { origin: usize, target: usize },
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("edge list line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    /// True for errors caused by the graph or arithmetic range rather than by
    /// malformed input or bad parameters.
    pub fn is_domain(&self) -> bool {
        matches!(self, Error::Disconnected { .. } | Error::Overflow(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
