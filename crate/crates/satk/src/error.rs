use serde_json::json;
use thiserror::Error;

use satk_core::oracle::OracleError;
use satk_core::{DatumError, SatakeError};

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed invocation or unreadable input; exit code 2.
    #[error("{0}")]
    Usage(String),
    /// Well-formed input the mathematics rejects; exit code 1.
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        CliError::Domain(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }

    /// One-line JSON error object.
    pub fn to_json(&self) -> String {
        let kind = match self {
            CliError::Usage(_) => "usage",
            CliError::Domain(_) => "domain",
        };
        json!({ "error": { "kind": kind, "message": self.to_string() } }).to_string()
    }
}

impl From<DatumError> for CliError {
    fn from(e: DatumError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<SatakeError> for CliError {
    fn from(e: SatakeError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::Domain(e.to_string())
    }
}
