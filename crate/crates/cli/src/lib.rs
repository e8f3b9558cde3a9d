//! Library side of the `lrq` command-line tool.

pub mod args;
pub mod bench;
pub mod commands;
mod error;
pub mod fasta;
pub mod output;

pub use error::CliError;
