//! Library side of the `transurf` command-line tool.

pub mod commands;
pub mod config;
pub mod export;
pub mod verify;

use std::fmt;

pub use config::RunConfig;
pub use verify::VerifySummary;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFY_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const IO: i32 = 3;
}

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Usage(String),
    Compute(transurf::Error),
    Io(String),
    VerifyFailed { failed: usize, total: usize },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Compute(_) => exit::USAGE,
            CliError::Io(_) => exit::IO,
            CliError::VerifyFailed { .. } => exit::VERIFY_FAILED,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Compute(e) => write!(f, "{e}"),
            CliError::Io(m) => write!(f, "I/O error: {m}"),
            CliError::VerifyFailed { failed, total } => {
                write!(f, "{failed} of {total} checks failed")
            }
        }
    }
}

impl std::error::Error for CliError {}

impl From<transurf::Error> for CliError {
    fn from(e: transurf::Error) -> Self {
        CliError::Compute(e)
    }
}

/// Runs one command; the error carries the exit code.
pub fn run(cfg: &RunConfig) -> Result<(), CliError> {
    match cfg {
        RunConfig::Residual { .. } => commands::cmd_residual(cfg),
        RunConfig::Profile { .. } => commands::cmd_profile(cfg),
        RunConfig::Mesh { .. } => commands::cmd_mesh(cfg),
        RunConfig::Verify { .. } => {
            let summary = commands::cmd_verify(cfg)?;
            print!("{}", summary.render());
            if summary.passed() {
                Ok(())
            } else {
                Err(CliError::VerifyFailed {
                    failed: summary.checks.iter().filter(|c| !c.passed).count(),
                    total: summary.checks.len(),
                })
            }
        }
    }
}
