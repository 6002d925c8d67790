use thiserror::Error;

use crate::mvg::Axiom;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-range input data.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Parameters that do not yield integral, nonnegative multiplicities.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// A table that fails one of the multivalued-group axioms.
    #[error("not a multivalued group: {axiom} fails at {witness:?}")]
    NotAMultivaluedGroup { axiom: Axiom, witness: Vec<usize> },

    /// The operation is not defined for this kind of input.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A configured size cap would be exceeded.
    #[error("resource limit exceeded: {what} needs {requested}, cap is {cap}")]
    ResourceLimit {
        what: &'static str,
        requested: u128,
        cap: usize,
    },

    /// A library invariant was broken; indicates a bug rather than bad input.
    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
