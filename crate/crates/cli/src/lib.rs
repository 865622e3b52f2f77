//! Command implementations for the `lieclass` binary.
//!
//! Each subcommand produces either a plain-text report or a JSON document
//! carrying the same values; rationals go on the wire as `p/q` strings so
//! nothing is lost to floating point. SVG output exists for the rank-2
//! root-system and alcove pictures.

pub mod commands;
pub mod svg;

pub use commands::*;

/// Process exit codes: 2 for usage/validation errors, 3 for capability
/// errors (such as SVG above rank 2).
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Capability(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Capability(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Capability(_) => 3,
        }
    }
}

pub(crate) fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}
