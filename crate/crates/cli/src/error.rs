use thiserror::Error;

pub type Result<T, E = CliError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] billiard_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("no recursion for this table; use --method oracle")]
    NoRecursion,
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// Every error is a rejected input; verification mismatches are reported
    /// as results, not errors.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
