use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("coordinate or threshold magnitude {0} exceeds the supported range")]
    Overflow(i128),

    /// A vertex outside the solution sees six or more solution vertices, so the
    /// graph contains an induced `K_{1,6}` and cannot be a unit disk graph.
    #[error("vertex {vertex} has {dominators} independent dominators; the graph is not a unit disk graph")]
    NotUnitDisk { vertex: usize, dominators: usize },

    #[error("{algorithm} exceeded its iteration cap of {cap}")]
    IterationCap { algorithm: &'static str, cap: usize },

    #[error("search budget of {limit} nodes exhausted")]
    Budget { limit: u64 },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
