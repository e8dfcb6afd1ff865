//! Baseline centralities: betweenness, closeness, eigenvector and PageRank
//! on unweighted static graphs, and temporal closeness on contact sequences.

mod betweenness;
mod closeness;
mod eigenvector;
mod graph;
mod pagerank;
mod snapshot;
mod temporal_closeness;

pub use betweenness::betweenness;
pub use closeness::closeness;
pub use eigenvector::{eigenvector_centrality, DEFAULT_EIGENVECTOR_TOL};
pub use graph::StaticGraph;
pub use pagerank::{pagerank, DEFAULT_GAMMA, DEFAULT_PAGERANK_TOL};
pub use snapshot::snapshot_average;
pub(crate) use snapshot::edgeless_value;
pub use temporal_closeness::{temporal_closeness, temporal_closeness_all, temporal_hopcounts};

pub const DEFAULT_MAX_ITER: usize = 100_000;

use crate::error::Result;
use crate::metric::StaticMetric;
use crate::scalar::Scalar;

/// Evaluates a static metric with the default solver settings.
pub fn static_metric<S: Scalar>(metric: StaticMetric, g: &StaticGraph) -> Result<Vec<S>> {
    Ok(match metric {
        StaticMetric::Betweenness => betweenness(g),
        StaticMetric::Closeness => closeness(g),
        StaticMetric::Eigenvector => eigenvector_centrality(
            g,
            S::from_f64_lossy(DEFAULT_EIGENVECTOR_TOL),
            DEFAULT_MAX_ITER,
        )?,
        StaticMetric::PageRank => pagerank(
            g,
            S::from_f64_lossy(DEFAULT_GAMMA),
            S::from_f64_lossy(DEFAULT_PAGERANK_TOL),
            DEFAULT_MAX_ITER,
        )?,
    })
}
