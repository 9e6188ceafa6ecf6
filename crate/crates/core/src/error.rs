use thiserror::Error;

use crate::graph::{Edge, Vertex};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),

    #[error("{0} is not an edge of the graph")]
    NotAnEdge(Edge),

    #[error("{0} is already an edge of the graph")]
    AlreadyAnEdge(Edge),

    #[error("invalid parameters: {0}")]
    Domain(String),

    #[error("no deletable links")]
    NoDeletableLinks,

    #[error("no addable links")]
    NoAddableLinks,

    #[error("{0} is not an action of the payoff table")]
    UnknownAction(Edge),

    #[error("invalid weights: {0}")]
    Weights(String),

    #[error("unknown criterion `{0}`")]
    UnknownCriterion(String),

    #[error("unknown verification target `{0}`")]
    UnknownTarget(String),

    #[error("invalid range: {0}")]
    InvalidRange(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
