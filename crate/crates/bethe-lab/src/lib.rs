//! Command-line front end for `bethe-lab-core`: flag and config-file parsing,
//! JSON and text reports, and concurrent execution of verification checks.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on invalid input.

pub mod checks;
pub mod config;
pub mod json;
pub mod run;

pub use checks::Check;
pub use config::{Cli, RunConfig};
pub use run::{execute, Outcome};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    /// Bad flags, config file or parameters.
    #[error("{0}")]
    Invalid(String),
    /// A computation aborted, e.g. a failed commutativity precheck.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

impl From<bethe_lab_core::Error> for CliError {
    fn from(e: bethe_lab_core::Error) -> Self {
        use bethe_lab_core::Error as E;
        match e {
            E::InvalidConfig(_) | E::CoincidentPoints | E::ParseRational(_) | E::DimensionMismatch(_) => {
                CliError::Invalid(e.to_string())
            }
            _ => CliError::Failed(e.to_string()),
        }
    }
}
