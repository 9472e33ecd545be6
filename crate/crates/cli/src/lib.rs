//! Library side of the `appell` command: argument model, commands and the
//! CSV/JSON table formats.

pub mod commands;
pub mod config;
pub mod output;

use std::fmt;

/// Usage error: bad flags, bad input file, bad parameters.
pub const EXIT_USAGE: i32 = 2;
/// The composition algorithm was asked for more terms than the cap allows.
pub const EXIT_CAP_EXCEEDED: i32 = 3;
/// Two algorithms (or kernels) disagreed.
pub const EXIT_MISMATCH: i32 = 4;
/// Anything else, such as an unreadable file.
pub const EXIT_FAILURE: i32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<appell_core::Error> for CliError {
    fn from(e: appell_core::Error) -> Self {
        use appell_core::Error::*;
        let code = match &e {
            CombinatorialBlowUp { .. } => EXIT_CAP_EXCEEDED,
            KernelDisagreement { .. } => EXIT_MISMATCH,
            Io(_) => EXIT_FAILURE,
            _ => EXIT_USAGE,
        };
        CliError::new(code, e.to_string())
    }
}
