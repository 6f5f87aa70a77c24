use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a universe of {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("side {0} is empty")]
    EmptySide(crate::family::Side),

    #[error("need at least two distinct edges, found {0}")]
    TooFewEdges(usize),

    #[error("edge {edge} has size {size}; no proper coloring exists")]
    Uncolorable { edge: usize, size: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("constructed certificate failed verification: {0}")]
    VerificationFailed(String),

    /// A search contradicted a structural guarantee that should hold for the
    /// input. Never swallowed.
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),

    #[error("search exceeded its node budget of {limit}")]
    BudgetExhausted { limit: u64 },

    #[error("malformed family document: {0}")]
    Parse(String),

    #[error("unsupported family document version {0}")]
    UnsupportedVersion(u64),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
