use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read {path}")]
    Ingestion {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{file}:{line}: {message}")]
    Parse {
        file: String,
        line: usize,
        message: String,
    },

    #[error("inconsistent dataset: {0}")]
    Consistency(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("graph has no nodes")]
    EmptyGraph,

    #[error("HITS power iteration did not converge (residual {residual:e} after {iterations} iterations)")]
    HitsNotConverged { residual: f64, iterations: usize },

    #[error(
        "diagram has {size} pairs, exact matching is capped at {cap}; subsample the diagrams first"
    )]
    MatchingTooLarge { size: usize, cap: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
