use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: io::Error },

    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: io::Error },

    /// Input that parses but holds nothing usable.
    #[error("{0}")]
    Data(String),

    #[error("{path}: {source}")]
    Index { path: PathBuf, source: lrq::Error },

    #[error(transparent)]
    Lrq(#[from] lrq::Error),

    #[error("output error: {0}")]
    Output(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Data(_) => 3,
            CliError::Index {
                source: lrq::Error::TextTooLarge { .. },
                ..
            }
            | CliError::Lrq(lrq::Error::TextTooLarge { .. }) => 3,
            _ => 2,
        }
    }
}
