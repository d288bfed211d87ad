use std::io;

use dirac1d_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
    #[error("verification failed")]
    VerificationFailed,
    #[error("io error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::VerificationFailed => 1,
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::InvalidParameter { .. } => CliError::Usage(e.to_string()),
            other => CliError::Domain(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
