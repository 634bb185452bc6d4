use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {0} is not an edge of the hypergraph")]
    EdgeNotFound(String),

    #[error("vertex {0} is isolated")]
    IsolatedVertex(String),

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("vertex set is not contained in the ground set")]
    BadVertexSet,

    #[error("set {0} is not a face of the complex")]
    NotAFace(String),

    #[error("{what} is {size}, over the cap of {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("set X_{0} is not a cover")]
    NotACover(usize),

    #[error("the empty edge is not allowed")]
    EmptyEdge,

    #[error("duplicate edge {0}")]
    DuplicateEdge(String),

    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),

    #[error("duplicate vertex label {0:?}")]
    DuplicateVertex(String),

    #[error("unknown vertex label {0:?}")]
    UnknownVertex(String),

    #[error("complexes live on different ground sets")]
    GroundMismatch,

    #[error("malformed input: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
