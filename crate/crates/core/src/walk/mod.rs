//! Walk-based centralities of a node in its partial temporal network.
//!
//! * weighted degree mass `d`: number of walks of at most `m` hops from the
//!   root in the weighted aggregate, multiplicities read as parallel links;
//! * temporal degree mass `δ` and its time-scaled form `Δ(α)`: number of
//!   time-respecting walks of at most `m` hops, each discounted by
//!   `α^(end time)`;
//! * temporal reachability `z` and its time-scaled form `Z(α)`: number of
//!   distinct nodes reached by such walks, each discounted by
//!   `α^(earliest arrival)`.
//!
//! The seed sits at relative time 0; a walk's first contact may be used
//! from relative time 1 on, and contact times along a walk strictly
//! increase.

mod arrival;
mod census;
mod degree_mass;
mod oracle;

pub(crate) use arrival::layered_arrival;
pub use arrival::{earliest_arrival, earliest_arrival_view, temporal_reachability, time_scaled_reachability, EarliestArrival};
pub use census::{temporal_degree_mass, time_scaled_degree_mass, walk_census, walk_census_view, CensusEntry, WalkCensus};
pub use degree_mass::{partial_weighted_degree_mass, weighted_degree_mass};
pub use oracle::{brute_force_walk_oracle, ORACLE_MAX_CONTACTS, ORACLE_MAX_HOPS};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub(crate) fn check_exact<S: Scalar>(value: S) -> Result<S> {
    let limit = S::exact_integer_limit();
    if value >= limit {
        Err(Error::PrecisionLoss {
            value: value.to_f64_lossy(),
            limit: limit.to_f64_lossy(),
        })
    } else {
        Ok(value)
    }
}

pub(crate) fn check_alpha<S: Scalar>(alpha: S) {
    assert!(
        alpha > S::zero() && alpha <= S::one(),
        "time-scaling factor must lie in (0, 1], got {alpha}"
    );
}
