//! Library side of the `grover` command: single-graph analysis, parameter
//! searches over graph families, and the verification suite.
//!
//! - [`analyze`]: full report for one graph
//! - [`search`]: Hamming, Johnson and strongly regular parameter scans
//! - [`verify`]: the pass/fail criteria table
//! - [`report`]: JSON and CSV rendering

pub mod analyze;
pub mod report;
pub mod search;
pub mod verify;

use grover_core::drg::DrgError;
use grover_core::graphs::GraphError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Drg(#[from] DrgError),
    #[error("{0}")]
    Usage(String),
    #[error("cannot access `{path}`: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// 3 for resource caps, 2 for everything the caller got wrong.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Graph(GraphError::SizeLimit { .. }) => 3,
            _ => 2,
        }
    }
}
