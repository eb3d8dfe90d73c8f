use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed input: bad JSON, unknown tokens, unreadable files.
    #[error("parse error: {0}")]
    Parse(String),
    /// Well-formed input that violates a mathematical constraint.
    #[error("constraint violation: {0}")]
    Constraint(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io(_) => 2,
            CliError::Constraint(_) => 3,
        }
    }
}

impl From<strel_core::Error> for CliError {
    fn from(e: strel_core::Error) -> Self {
        CliError::Constraint(e.to_string())
    }
}
