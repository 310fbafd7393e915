use thiserror::Error;

use crate::graph::VertexId;

/// Errors raised by graph construction, metric queries, search, and constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph is not connected: vertex {unreached} is unreachable from vertex {from}")]
    NotConnected { from: VertexId, unreached: VertexId },

    #[error("time budget exhausted while searching at size {size}")]
    BudgetExhausted { size: usize },

    /// A per-pair enumeration hit its cap and no certificate was found, so absence is not proven.
    #[error("search inconclusive at size {size}: geodesic enumeration was truncated")]
    TruncationInconclusive { size: usize },

    #[error("no row-saturating matching exists: {0}")]
    MatchingInfeasible(String),

    #[error("constructed certificate failed verification: {0}")]
    VerificationFailed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
