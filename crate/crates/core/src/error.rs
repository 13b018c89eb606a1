use thiserror::Error;

/// Errors raised by graph construction, parsing and the exact solvers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph order {0} exceeds the 64-vertex cap")]
    TooManyVertices(usize),

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("malformed edge list: {0}")]
    EdgeList(String),

    #[error("{0} is undefined for the empty (0-vertex) graph")]
    EmptyGraph(&'static str),

    #[error("{what}: graph order {n} is above the limit {limit}")]
    LimitExceeded {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("order is not a permutation of 0..{0}")]
    InvalidPermutation(usize),

    #[error("coloring is not a partition of the vertex set: {0}")]
    NotPartition(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("bound undefined: requires nonempty graph")]
    BoundUndefined,

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
