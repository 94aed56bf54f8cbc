use std::path::Path;

use thiserror::Error;

/// Input errors. All of them exit with code 3, except that `validate`
/// reports law violations as a decided negative.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },

    #[error("{path}: {message}")]
    Schema { path: String, message: String },

    #[error("{0}")]
    Reference(String),

    #[error("{name}: {source}")]
    Engine {
        name: String,
        #[source]
        source: sacts::Error,
    },

    #[error("{0}")]
    Usage(String),

    #[error("{file}: {inner}")]
    InFile { file: String, inner: Box<CliError> },
}

impl CliError {
    pub fn engine(name: &str, source: sacts::Error) -> Self {
        CliError::Engine {
            name: name.into(),
            source,
        }
    }

    pub fn in_file(self, file: &Path) -> Self {
        CliError::InFile {
            file: file.display().to_string(),
            inner: Box::new(self),
        }
    }

    /// The law-violation report behind this error, if that is all it is.
    pub fn laws(&self) -> Option<&sacts::ValidationReport> {
        match self {
            CliError::Engine {
                source: sacts::Error::Laws(r),
                ..
            } => Some(r),
            CliError::InFile { inner, .. } => inner.laws(),
            _ => None,
        }
    }
}
