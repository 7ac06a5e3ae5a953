//! CLI error classification and exit codes.
//!
//! Exit codes: 0 success, 2 usage (clap), 3 input parse error,
//! 4 precondition violation, 5 I/O or network failure, 6 digest mismatch.

use std::fmt;

#[derive(Debug)]
pub enum CliError {
    /// Malformed input data (run/qrels/pool/matrix files).
    Parse(String),
    /// Violated precondition or invalid parameter combination.
    Precondition(String),
    /// Filesystem or network failure.
    Io(String),
    /// Downloaded or cached artifact does not match its expected digest.
    Digest(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 3,
            CliError::Precondition(_) => 4,
            CliError::Io(_) => 5,
            CliError::Digest(_) => 6,
        }
    }

    pub fn io<E: fmt::Display>(context: &str, err: E) -> CliError {
        CliError::Io(format!("{context}: {err}"))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Precondition(m) => write!(f, "precondition violation: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
            CliError::Digest(m) => write!(f, "digest mismatch: {m}"),
        }
    }
}

impl From<ireval::Error> for CliError {
    fn from(e: ireval::Error) -> CliError {
        if e.is_parse_error() {
            CliError::Parse(e.to_string())
        } else {
            CliError::Precondition(e.to_string())
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
