use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An input lies outside the domain of the operation.
    #[error("invalid {field}: {reason}")]
    Domain { field: &'static str, reason: String },

    /// An iterative solver ran out of budget or lost its bracket.
    #[error("{solver} did not converge: {detail}")]
    Convergence { solver: &'static str, detail: String },

    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed JSON in {path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

impl Error {
    pub(crate) fn domain(field: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            field,
            reason: reason.into(),
        }
    }

    pub(crate) fn convergence(solver: &'static str, detail: impl Into<String>) -> Self {
        Error::Convergence {
            solver,
            detail: detail.into(),
        }
    }
}
