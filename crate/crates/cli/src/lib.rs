//! Command line front end: instance files, solver dispatch, generators and
//! the benchmark grid.

pub mod app;
pub mod bench;
pub mod format;
pub mod solve;

use std::path::PathBuf;

use thiserror::Error;
use timeline_core::generators::{ReductionError, SourceError};
use timeline_core::timeline::InstanceError;
use timeline_core::SolveError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        source: format::ParseError,
    },
    #[error("{path}: {source}")]
    Source { path: PathBuf, source: SourceError },
    #[error("witness file {path}: {source}")]
    Witness {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Invalid(String),
}

/// Exit codes: yes, no, error.
pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
