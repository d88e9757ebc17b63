use std::path::PathBuf;

use bvx_core::Error as CoreError;

/// Everything a command can fail with. [`CliError::exit_code`] maps input
/// problems to 1 and failed preconditions or certifications to 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Precondition(_) => 2,
            _ => 1,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::NotAClique
            | CoreError::NotAPath
            | CoreError::NotACycle
            | CoreError::NotATree
            | CoreError::Weighted
            | CoreError::NotProperInterval(..)
            | CoreError::SigmaValidation(..)
            | CoreError::Decomposition(_)
            | CoreError::NoCandidate => CliError::Precondition(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
