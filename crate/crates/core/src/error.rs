use thiserror::Error;

use crate::fractions::AxiomReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Malformed input: dangling names, partial tables, wrong lengths.
    #[error("input error: {0}")]
    Input(String),
    /// Well-formed input outside an operation's domain.
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A span composite needed a filler that does not exist.
    #[error("missing filler: {0}")]
    MissingFiller(String),
    #[error("fractions axioms do not hold:\n{0}")]
    Axioms(Box<AxiomReport>),
    /// An internal consistency check failed. Indicates a bug.
    #[error("integrity error: {0}")]
    Integrity(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn integrity(msg: impl Into<String>) -> Self {
        Error::Integrity(msg.into())
    }
}
