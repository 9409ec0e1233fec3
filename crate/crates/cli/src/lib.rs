//! Command implementations behind the `judicious` binary. Each command
//! returns its stdout text and exit status so it can be tested without a
//! process boundary.

pub mod commands;
pub mod config;
pub mod format;

use std::io::Read;
use std::path::Path;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl From<judicious::Error> for CliError {
    fn from(e: judicious::Error) -> Self {
        match e {
            judicious::Error::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

/// Reads a file, or stdin for `-`.
pub fn read_input(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Writes to a file, or returns the text for stdout when `path` is `None`.
pub fn write_output(path: Option<&Path>, text: String) -> Result<Option<String>, CliError> {
    match path {
        None => Ok(Some(text)),
        Some(p) => std::fs::write(p, text)
            .map(|_| None)
            .map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
    }
}
