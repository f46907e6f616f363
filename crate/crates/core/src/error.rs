//! Error type shared by every module of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Numeric parameters outside the domain of an operation.
    #[error("invalid parameters: {0}")]
    Parameter(String),

    /// A design, family, factorization or expansion set fails a structural precondition.
    #[error("structural violation: {0}")]
    Structural(String),

    #[error("unknown catalog entry `{name}`; available: {}", available.join(", "))]
    UnknownCatalogName { name: String, available: Vec<String> },

    /// The exhaustive search visited more nodes than it was allowed to.
    #[error("search budget of {budget} nodes exceeded")]
    SearchBudgetExceeded { budget: u64 },

    /// The exhaustive search was asked for an instance above the default size limits.
    #[error("search refused: {0}")]
    SearchRefused(String),

    #[error("malformed design document: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }
}
