//! Influence prediction on temporal contact networks.
//!
//! The crate computes walk-based centralities of each node from a partially
//! observed (local, early) temporal network, estimates every node's spreading
//! influence by Monte-Carlo SI simulation, and scores how well a centrality
//! ranks nodes by influence.
//!
//! The metric code is generic over [`Scalar`] (`f32` or `f64`); the aliases
//! below fix it to `f64`, which is what the experiment harness uses.

pub mod classic;
pub mod derive;
pub mod error;
pub mod eval;
pub mod harness;
pub mod metric;
pub mod network;
pub mod scalar;
pub mod si;
pub mod walk;

pub use error::{Error, Result};
pub use metric::{Metric, Mode, StaticMetric};
pub use network::{AggregatedNetwork, Contact, NodeId, PartialTemporalNetwork, TemporalNetwork, Timestep};
pub use scalar::Scalar;

pub type WalkCensus = walk::WalkCensus<f64>;
pub type WalkCensus32 = walk::WalkCensus<f32>;
pub type CentralityVector = derive::CentralityVector<f64>;
pub type CentralityVector32 = derive::CentralityVector<f32>;
pub type WalkProfile = derive::WalkProfile<f64>;
