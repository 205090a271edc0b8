use thiserror::Error;

use crate::graph::VertexSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("graph has {requested} vertices, capacity is {}", crate::graph::MAX_VERTICES)]
    Capacity { requested: usize },

    #[error("exact budget exhausted")]
    BudgetExhausted,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("arithmetic overflow while evaluating {0}")]
    Overflow(&'static str),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("hypothesis violated: {hypothesis}")]
    HypothesisViolated {
        hypothesis: String,
        witness: Option<VertexSet>,
    },

    #[error("no good partition exists for the given classes")]
    Infeasible,

    /// A constructive step produced something that fails its own guarantee.
    /// Reaching this is a bug (or a counterexample to a cited theorem).
    #[error("constructive step failed: {0}")]
    ProofStep(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
