use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("network has no contacts")]
    EmptyNetwork,
    #[error("node {node} out of range for a network of {n_nodes} nodes")]
    NodeOutOfRange { node: usize, n_nodes: usize },
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("walk count {value:e} exceeds the exact integer range {limit:e} of the scalar type")]
    PrecisionLoss { value: f64, limit: f64 },
    #[error("instance too large for brute-force enumeration: {0}")]
    InstanceTooLarge(String),
    #[error("{method} did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence {
        method: &'static str,
        iterations: usize,
        residual: f64,
    },
    #[error("graph has no edges")]
    EdgelessGraph,
    #[error("correlation undefined: {0}")]
    UndefinedCorrelation(String),
    #[error("timestamp shuffle gave up after {0} collision retries")]
    ShuffleExhausted(usize),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("config: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
