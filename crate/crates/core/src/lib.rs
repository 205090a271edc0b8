//! Executable, certificate-producing versions of the structural arguments
//! behind polynomial chromatic bounds for graphs that exclude an induced
//! path (or broom) together with a complete multipartite subgraph.
//!
//! Every search here is exact. When a [`Budget`] runs out the caller gets
//! [`Error::BudgetExhausted`], never an approximate answer.

pub mod budget;
pub mod certify;
pub mod chromatic;
pub mod connectivity;
pub mod error;
pub mod graph;
pub mod partition;
pub mod patterns;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
