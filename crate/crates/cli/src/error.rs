//! CLI error split: usage errors exit 1, runtime errors exit 2.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad invocation or configuration: wrong flags, unreadable or invalid
    /// config, unknown catalog names.
    #[error("{0}")]
    Usage(String),
    /// Failure while executing a valid request: IO errors, corrupt trace
    /// files, internal inconsistencies.
    #[error("{0}")]
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Runtime(_) => 2,
        }
    }

    pub fn runtime_io(context: &str, err: std::io::Error) -> Self {
        CliError::Runtime(format!("{context}: {err}"))
    }
}

impl From<mbgo_core::Error> for CliError {
    fn from(err: mbgo_core::Error) -> Self {
        match err {
            // Core configuration/catalog problems stem from user input.
            mbgo_core::Error::Config(_) | mbgo_core::Error::Catalog(_) => {
                CliError::Usage(err.to_string())
            }
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
