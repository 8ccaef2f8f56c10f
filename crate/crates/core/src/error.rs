use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph on {n} vertices exceeds the vertex cap of {cap}")]
    TooManyVertices { n: usize, cap: usize },

    #[error("edge {{{0}, {1}}} is not present in the graph")]
    MissingEdge(usize, usize),

    #[error("invalid input: {0}")]
    Input(String),

    /// The graph does not belong to the requested class. `witness` is a
    /// vertex that blocked recognition, when one is available.
    #[error("not a {class} graph: {reason}")]
    NotInClass {
        class: &'static str,
        witness: Option<usize>,
        reason: String,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("oracle search exhausted its budget of {0} nodes")]
    Inexact(u64),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
