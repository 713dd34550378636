use thiserror::Error;

/// Errors produced by graph construction, parsing and encoding.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop on vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("alpha must be at least 1")]
    ZeroAlpha,

    #[error("degree cap must be at least 1")]
    ZeroDegreeCap,

    #[error("empty alpha list")]
    EmptyAlphaList,

    #[error("vertex {vertex} is not within {alpha} hops of root {root}")]
    OutsideEgoNetwork {
        vertex: usize,
        root: usize,
        alpha: usize,
    },

    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),

    #[error("random regular generator gave up after {restarts} restarts")]
    TooManyRestarts { restarts: usize },

    #[error("isomorphism oracle is limited to {limit} vertices, got {n}")]
    OracleSizeLimit { n: usize, limit: usize },

    #[error("duplicate label {0:?} in collection")]
    DuplicateLabel(String),

    #[error("empty collection")]
    EmptyCollection,

    #[error(
        "verification requires graphs with at most {limit} vertices; offending graphs: {graphs:?}"
    )]
    VerifyTooLarge { limit: usize, graphs: Vec<usize> },
}

pub type Result<T> = std::result::Result<T, Error>;
