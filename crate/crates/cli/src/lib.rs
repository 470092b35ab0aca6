//! Command-line jobs and reproduction suites for `logbundle`.

pub mod jobs;
pub mod oracle;
pub mod report;
pub mod suites;

pub use jobs::{run, Command, JobSpec, Outcome, DEFAULT_SEED};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error(transparent)]
    Math(#[from] logbundle::Error),
}
