//! CLI error type with one distinct exit code per failure class.

use thiserror::Error;

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },
    #[error("{0}")]
    Validation(mcdm_core::Error),
    #[error("{0}")]
    Convergence(mcdm_core::Error),
    #[error("{0}")]
    Inconsistent(mcdm_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn parse(path: &str, line: usize, message: impl Into<String>) -> Self {
        CliError::Parse {
            path: path.to_string(),
            line,
            message: message.into(),
        }
    }

    /// Process exit code; the four domain failure classes each get their
    /// own code, usage errors share clap's 2, I/O falls back to 1.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } => 10,
            CliError::Validation(_) => 11,
            CliError::Convergence(_) => 12,
            CliError::Inconsistent(_) => 13,
            CliError::Usage(_) => 2,
            CliError::Io { .. } => 1,
        }
    }
}

impl From<mcdm_core::Error> for CliError {
    fn from(err: mcdm_core::Error) -> Self {
        match err {
            mcdm_core::Error::NoConvergence(_) => CliError::Convergence(err),
            mcdm_core::Error::InconsistentJudgments { .. } => CliError::Inconsistent(err),
            mcdm_core::Error::UnknownMethod(_) => CliError::Usage(err.to_string()),
            _ => CliError::Validation(err),
        }
    }
}
