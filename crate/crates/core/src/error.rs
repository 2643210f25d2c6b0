use thiserror::Error;

use crate::chartab::CharTableError;
use crate::ekg::CocycleError;
use crate::groups::GroupError;
use crate::presentations::{EnumerationError, ParseError};
use crate::witt::FusionError;

/// Umbrella error used by the loaders, the screen and the CLI.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    CharTable(#[from] CharTableError),
    #[error(transparent)]
    Fusion(#[from] FusionError),
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
    #[error("{0}: no group files")]
    EmptyCorpus(String),
    #[error("{0}")]
    Usage(String),
}

impl Error {
    /// Process exit code: 1 usage, 2 parse, 3 computation.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) => 1,
            Error::Io { .. } | Error::Parse(_) | Error::EmptyCorpus(_) => 2,
            _ => 3,
        }
    }
}
