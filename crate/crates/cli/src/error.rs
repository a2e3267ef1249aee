use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// bad flags or arguments; exit status 2
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] specjoin::Error),

    #[error("{path}: {source}")]
    Input { path: String, source: specjoin::Error },

    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },

    /// a check ran and did not pass; its report is already on stdout
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
