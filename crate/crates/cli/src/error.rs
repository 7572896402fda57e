use pretzel_core::{Error, SpecError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Budget(String),
    #[error("verification failed: {0} check(s) reported failures")]
    Verification(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 0 success, 1 failed verification or I/O, 2 usage or spec error,
    /// 3 method precondition, 4 resource budget.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Spec(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Budget(_) => 4,
            CliError::Verification(_) | CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Spec(s) => CliError::Spec(s),
            Error::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
