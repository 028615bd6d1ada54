use thiserror::Error;

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {0}: {1}")]
    Io(String, std::io::Error),
    #[error("{0} does not match the file format: {1}")]
    Schema(String, serde_json::Error),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] catfrac::Error),
}

impl CliError {
    /// 1 when a checked property failed, 2 for input and precondition errors.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(catfrac::Error::Axioms(_))
            | CliError::Core(catfrac::Error::MissingFiller(_))
            | CliError::Core(catfrac::Error::Integrity(_)) => 1,
            _ => 2,
        }
    }
}
