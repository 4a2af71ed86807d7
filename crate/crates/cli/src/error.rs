use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Failures outside the per-knot pipeline.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed corpus: {0}")]
    Corpus(String),
    #[error("malformed cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Knot(#[from] hfk_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Knot(e) => e.exit_code(),
            _ => 1,
        }
    }

    pub fn record(&self) -> ErrorRecord {
        match self {
            CliError::Knot(e) => ErrorRecord::from(e),
            other => ErrorRecord {
                class: "input".into(),
                tag: match other {
                    CliError::Io { .. } => "io",
                    CliError::Corpus(_) => "corpus",
                    _ => "cache",
                }
                .into(),
                message: other.to_string(),
                exit_code: 1,
            },
        }
    }
}

/// Machine-readable error.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub class: String,
    pub tag: String,
    pub message: String,
    pub exit_code: i32,
}

impl From<&hfk_core::Error> for ErrorRecord {
    fn from(e: &hfk_core::Error) -> Self {
        Self {
            class: match e.class() {
                hfk_core::ErrorClass::Input => "input",
                hfk_core::ErrorClass::Resource => "resource",
                hfk_core::ErrorClass::Internal => "internal",
            }
            .into(),
            tag: e.tag().into(),
            message: e.to_string(),
            exit_code: e.exit_code(),
        }
    }
}
