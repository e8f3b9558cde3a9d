use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A 1-indexed position outside `1..=len`.
    #[error("position {pos} out of range (valid positions are 1..={len})")]
    PositionOutOfRange { pos: usize, len: usize },

    /// A substring `[start, start + length)` that does not fit the text.
    #[error("substring at {start} with length {length} exceeds text of length {len}")]
    SubstringOutOfRange {
        start: usize,
        length: usize,
        len: usize,
    },

    #[error("text too large for index format: {len} bytes (limit is 2^32 - 1)")]
    TextTooLarge { len: u64 },

    /// Malformed or truncated index stream.
    #[error("index format error: {0}")]
    Format(String),

    /// Well-formed stream whose arrays are inconsistent.
    #[error("index integrity error: {0}")]
    Integrity(String),

    /// A state the two-table maintenance can never legitimately reach.
    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}
