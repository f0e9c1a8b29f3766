//! Front end for the `oppm` matchers: random workload generation, a file
//! format for sequences and matrices, instrumented matching runs and the
//! benchmark harness behind the `oppm` binary.

pub mod bench;
pub mod io;
pub mod workload;

use thiserror::Error;

pub use crate::bench::{bench, summarize, BenchRow, Grid, Preset, SummaryRow};
pub use crate::workload::{generate, run, Algo, Dim, Instance, MatchReport, Positions};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("algorithm `{algo}` does not support {dim}D inputs")]
    Unsupported { algo: Algo, dim: Dim },

    #[error("invalid workload: {0}")]
    Workload(String),

    #[error(transparent)]
    Oppm(#[from] oppm::OppmError),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, CliError>;
