//! Error types shared across the crate.

use std::path::PathBuf;
use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid user-supplied configuration (sizes, rates, batch protocol).
    #[error("configuration error: {0}")]
    Config(String),

    /// Data validation failure (non-binary masks, shape mismatches, bad splits).
    #[error("data error: {0}")]
    Data(String),

    /// Tensor shape mismatch between two operands.
    #[error("shape mismatch: expected {expected}, got {got} ({context})")]
    Shape {
        expected: String,
        got: String,
        context: String,
    },

    /// A loss term stopped being finite during training.
    #[error("non-finite loss: term `{term}` became {value} at epoch {epoch}")]
    NonFinite {
        term: &'static str,
        value: f64,
        epoch: usize,
    },

    /// A manifest referenced a file that does not exist.
    #[error("missing file referenced by manifest: {0}")]
    MissingFile(PathBuf),

    /// Checkpoint could not be read or does not match the architecture.
    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error("io error at {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("json error at {path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    #[error("image error at {path}: {source}")]
    Image {
        path: PathBuf,
        #[source]
        source: image::ImageError,
    },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn shape(expected: impl ToString, got: impl ToString, context: impl ToString) -> Self {
        Error::Shape {
            expected: expected.to_string(),
            got: got.to_string(),
            context: context.to_string(),
        }
    }
}
