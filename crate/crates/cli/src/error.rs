use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}:{line}:{column}: {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Core(#[from] quadkit::Error),
}

impl CliError {
    /// 2 for bad input, 3 when an identity that must hold did not.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(quadkit::Error::Internal(_)) => 3,
            _ => 2,
        }
    }
}
