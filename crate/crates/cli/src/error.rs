use std::path::PathBuf;

use spinor_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("numeric failure at t = {t}: {msg}")]
    Numeric { t: f64, msg: String },
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    /// 0 pass, 1 verification failure, 2 input, 3 I/O, 4 numeric.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Input(_) => 2,
            CliError::Io { .. } => 3,
            CliError::Numeric { .. } => 4,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Numeric { t, msg } => CliError::Numeric { t, msg },
            CoreError::Structural(msg) => CliError::Verification(msg),
            other => CliError::Input(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
