use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("edge {{{0}, {1}}} not present")]
    MissingEdge(usize, usize),

    #[error("not a permutation of the vertex set")]
    InvalidPermutation,

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("canonicalization limit exceeded: order {order} > limit {limit}")]
    CanonLimitExceeded { order: usize, limit: usize },

    #[error("enumeration refused: n = {n} exceeds the desk-scale limit {limit} (set DSO_MAX_N to override)")]
    EnumerationLimitExceeded { n: usize, limit: usize },

    /// A parameter violates a stated precondition; the message names it.
    #[error("constraint violated: {0}")]
    Domain(String),
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
