//! Experiment protocol: parameter sweeps, result aggregation, dataset
//! statistics and randomized null-model studies.

pub mod best;
pub mod cache;
pub mod config;
pub mod randomize;
pub mod rows;
pub mod stats;
pub mod sweep;
pub mod synthetic;
pub mod threads;

pub use best::{best_quality, BestQuality};
pub use cache::{network_digest, InfluenceCache};
pub use config::{SweepConfig, Window};
pub use randomize::randomization_study;
pub use rows::{read_rows, write_rows, ResultRow, RESULTS_HEADER};
pub use stats::{dataset_report, DatasetStats};
pub use sweep::{load_network, run_sweep, sweep_rows, SweepSummary};
pub use synthetic::{planted_communities, SyntheticSpec};
