//! Exit codes and the error type carried back to `main`.

use hcolor::Error;

pub const OK: u8 = 0;
pub const USAGE: u8 = 1;
pub const CLASS: u8 = 2;
pub const CAP: u8 = 3;
pub const MISMATCH: u8 = 4;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
    /// Printed on stdout before exiting, e.g. a counterexample.
    pub output: Option<String>,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: USAGE, message: message.into(), output: None }
    }

    pub fn mismatch(message: impl Into<String>, output: String) -> Self {
        CliError { code: MISMATCH, message: message.into(), output: Some(output) }
    }
}

pub fn code_for(e: &Error) -> u8 {
    match e {
        Error::ClassViolation(_)
        | Error::StructureViolation { .. }
        | Error::NotCograph(_)
        | Error::NoMonitorBase { .. } => CLASS,
        Error::CapExceeded { .. } | Error::SamplingBudget(_) => CAP,
        _ => USAGE,
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError { code: code_for(&e), message: e.to_string(), output: None }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::usage(e.to_string())
    }
}
