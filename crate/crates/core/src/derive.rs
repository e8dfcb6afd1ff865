//! Turning a temporal network into per-node predictor scores.
//!
//! All derivations observe the spreading window `(t0, t0 + tau]`. Partial
//! modes score each node on its own ego network extracted from
//! `(t0, t0 + phi_len]` with hop limit `m`; full modes use the whole window.

use rayon::prelude::*;

use crate::classic::{
    edgeless_value, snapshot_average, static_metric, temporal_closeness, temporal_closeness_all,
    StaticGraph,
};
use crate::error::{Error, Result};
use crate::metric::{Metric, Mode, StaticMetric};
use crate::network::{PartialTemporalNetwork, TemporalNetwork, Timestep};
use crate::scalar::Scalar;
use crate::walk::{
    earliest_arrival, partial_weighted_degree_mass, time_scaled_reachability, walk_census,
    EarliestArrival,
};

/// Observation parameters of one prediction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Observation {
    pub t0: Timestep,
    pub tau: Timestep,
    pub phi_len: Timestep,
    pub hop_limit: usize,
    pub alpha: f64,
}

/// Predictor scores for every node.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralityVector<S> {
    pub metric: Metric,
    pub mode: Mode,
    pub values: Vec<S>,
}

/// Scores every node with `metric` derived in `mode`.
pub fn centrality<S: Scalar>(
    metric: Metric,
    mode: Mode,
    net: &TemporalNetwork,
    obs: &Observation,
) -> Result<CentralityVector<S>> {
    if !metric.modes().contains(&mode) {
        return Err(Error::InvalidParameter(format!(
            "metric {metric} is not defined in mode {mode}"
        )));
    }
    check_window(net, obs.t0, obs.tau)?;
    let values = match (metric.as_static(), mode) {
        (None, Mode::Partial) => {
            let alpha = S::from_f64_lossy(obs.alpha);
            let profiles = walk_profiles::<S>(net, obs.t0, obs.phi_len, obs.hop_limit)?;
            profiles
                .iter()
                .map(|p| p.score(metric, alpha))
                .collect()
        }
        (Some(m), Mode::FullAggregated) => full_aggregated(m, net, obs.t0, obs.tau)?,
        (Some(m), Mode::FullTemporal) => snapshot_average(m, &net.view(obs.t0, obs.tau))?,
        (None, Mode::FullTemporal) => temporal_closeness_all(&net.view(obs.t0, obs.tau)),
        (_, Mode::PartialAggregated | Mode::PartialTemporal) => {
            partial_classic(metric, mode, net, obs.t0, obs.phi_len, obs.hop_limit)?
        }
        _ => unreachable!("mode support checked above"),
    };
    Ok(CentralityVector {
        metric,
        mode,
        values,
    })
}

pub(crate) fn check_window(net: &TemporalNetwork, t0: Timestep, len: Timestep) -> Result<()> {
    if u64::from(t0) + u64::from(len) > u64::from(net.horizon()) || len == 0 {
        return Err(Error::InvalidWindow(format!(
            "({t0}, {}] does not fit in 1..={}",
            u64::from(t0) + u64::from(len),
            net.horizon()
        )));
    }
    Ok(())
}

/// Static metric on the unweighted aggregate of `(t0, t0 + tau]`.
pub fn full_aggregated<S: Scalar>(
    metric: StaticMetric,
    net: &TemporalNetwork,
    t0: Timestep,
    tau: Timestep,
) -> Result<Vec<S>> {
    let g = StaticGraph::from_aggregate(&net.view(t0, tau).aggregate());
    static_or_blank(metric, &g)
}

fn static_or_blank<S: Scalar>(metric: StaticMetric, g: &StaticGraph) -> Result<Vec<S>> {
    if g.n_edges() == 0 {
        edgeless_value(metric, g.n_nodes())
    } else {
        static_metric(metric, g)
    }
}

/// A classic metric evaluated, for each node, on that node's partial
/// network; the node's own score is kept.
pub fn partial_classic<S: Scalar>(
    metric: Metric,
    mode: Mode,
    net: &TemporalNetwork,
    t0: Timestep,
    phi_len: Timestep,
    hop_limit: usize,
) -> Result<Vec<S>> {
    (0..net.n_nodes())
        .into_par_iter()
        .map(|root| {
            let p = net.extract_partial(root, t0, phi_len, hop_limit)?;
            partial_root_score(metric, mode, &p)
        })
        .collect()
}

fn partial_root_score<S: Scalar>(metric: Metric, mode: Mode, p: &PartialTemporalNetwork) -> Result<S> {
    let root = p.root_local();
    let view = p.view();
    let scores = match (metric.as_static(), mode) {
        (Some(m), Mode::PartialAggregated) => {
            static_or_blank(m, &StaticGraph::from_aggregate(&view.aggregate()))?
        }
        (Some(m), Mode::PartialTemporal) => snapshot_average(m, &view)?,
        (None, Mode::PartialTemporal) if metric == Metric::TemporalCloseness => {
            return Ok(temporal_closeness(&view, root));
        }
        _ => {
            return Err(Error::InvalidParameter(format!(
                "metric {metric} is not defined in mode {mode}"
            )))
        }
    };
    Ok(scores[root])
}

/// Everything needed to evaluate `d`, `Δ(α)` and `Z(α)` of one root for any
/// `α`: the walk count per end time and the arrival time per reached node.
#[derive(Clone, Debug, PartialEq)]
pub struct WalkProfile<S> {
    pub degree_mass: S,
    /// `(relative end time, number of walks)`, ascending in time.
    pub walks_by_time: Vec<(Timestep, S)>,
    pub arrivals: EarliestArrival,
}

impl<S: Scalar> WalkProfile<S> {
    pub fn of(pnet: &PartialTemporalNetwork) -> Result<Self> {
        let census = walk_census::<S>(pnet)?;
        let mut by_time = std::collections::BTreeMap::new();
        for e in census.entries() {
            *by_time.entry(e.time).or_insert_with(S::zero) += e.count;
        }
        Ok(WalkProfile {
            degree_mass: partial_weighted_degree_mass(pnet)?,
            walks_by_time: by_time.into_iter().collect(),
            arrivals: earliest_arrival(pnet),
        })
    }

    pub fn time_scaled_degree_mass(&self, alpha: S) -> S {
        crate::walk::check_alpha(alpha);
        if alpha == S::one() {
            return self.walks_by_time.iter().map(|&(_, c)| c).sum();
        }
        self.walks_by_time
            .iter()
            .map(|&(t, c)| c * alpha.powi(t as i32))
            .sum()
    }

    pub fn time_scaled_reachability(&self, alpha: S) -> S {
        time_scaled_reachability(&self.arrivals, alpha)
    }

    /// Score under one of the walk metrics; classic metrics are not
    /// profile-derived and yield NaN.
    pub fn score(&self, metric: Metric, alpha: S) -> S {
        match metric {
            Metric::DegreeMass => self.degree_mass,
            Metric::TemporalDegreeMass => self.time_scaled_degree_mass(alpha),
            Metric::TemporalReachability => self.time_scaled_reachability(alpha),
            _ => S::nan(),
        }
    }
}

/// Walk profile of every node in its partial network over
/// `(t0, t0 + phi_len]` with hop limit `hop_limit`.
pub fn walk_profiles<S: Scalar>(
    net: &TemporalNetwork,
    t0: Timestep,
    phi_len: Timestep,
    hop_limit: usize,
) -> Result<Vec<WalkProfile<S>>> {
    (0..net.n_nodes())
        .into_par_iter()
        .map(|root| WalkProfile::of(&net.extract_partial(root, t0, phi_len, hop_limit)?))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walk::{temporal_degree_mass, time_scaled_degree_mass, weighted_degree_mass};

    fn e2() -> TemporalNetwork {
        TemporalNetwork::from_triples(&[(0, 1, 1), (0, 1, 2), (1, 2, 3)]).unwrap()
    }

    fn obs(alpha: f64, m: usize) -> Observation {
        Observation {
            t0: 0,
            tau: 3,
            phi_len: 3,
            hop_limit: m,
            alpha,
        }
    }

    #[test]
    fn proposed_vectors() {
        let net = e2();
        let d: CentralityVector<f64> =
            centrality(Metric::DegreeMass, Mode::Partial, &net, &obs(1.0, 2)).unwrap();
        assert_eq!(d.values[0], 8.0);
        let delta: CentralityVector<f64> =
            centrality(Metric::TemporalDegreeMass, Mode::Partial, &net, &obs(0.5, 2)).unwrap();
        assert_eq!(delta.values[0], 1.25);
        let z: CentralityVector<f64> =
            centrality(Metric::TemporalReachability, Mode::Partial, &net, &obs(0.5, 2)).unwrap();
        assert_eq!(z.values[0], 0.625);
    }

    #[test]
    fn profile_matches_direct_metrics() {
        let net = e2();
        for root in 0..3 {
            let p = net.extract_partial(root, 0, 3, 2).unwrap();
            let prof = WalkProfile::<f64>::of(&p).unwrap();
            let c = walk_census::<f64>(&p).unwrap();
            assert_eq!(prof.time_scaled_degree_mass(1.0), temporal_degree_mass(&c));
            assert_eq!(prof.time_scaled_degree_mass(0.3), time_scaled_degree_mass(&c, 0.3));
            let agg = p.view().aggregate();
            assert_eq!(
                prof.degree_mass,
                weighted_degree_mass::<f64>(&agg, p.root_local(), 2).unwrap()
            );
        }
    }

    #[test]
    fn mode_support() {
        let net = e2();
        assert!(centrality::<f64>(Metric::DegreeMass, Mode::FullTemporal, &net, &obs(1.0, 1)).is_err());
        assert!(
            centrality::<f64>(Metric::TemporalCloseness, Mode::FullAggregated, &net, &obs(1.0, 1)).is_err()
        );
        let tc: CentralityVector<f64> =
            centrality(Metric::TemporalCloseness, Mode::FullTemporal, &net, &obs(1.0, 1)).unwrap();
        assert_eq!(tc.values, vec![1.5, 2.0, 1.0]);
    }

    #[test]
    fn partial_modes_with_full_information_match_full_modes() {
        let net = TemporalNetwork::from_triples(&[(0, 1, 1), (1, 2, 2), (2, 3, 3), (0, 2, 4), (3, 4, 4)])
            .unwrap();
        let o = Observation {
            t0: 0,
            tau: 4,
            phi_len: 4,
            hop_limit: 10,
            alpha: 1.0,
        };
        let full: CentralityVector<f64> =
            centrality(Metric::TemporalCloseness, Mode::FullTemporal, &net, &o).unwrap();
        let part: CentralityVector<f64> =
            centrality(Metric::TemporalCloseness, Mode::PartialTemporal, &net, &o).unwrap();
        assert_eq!(full.values, part.values);
        let full: CentralityVector<f64> =
            centrality(Metric::Closeness, Mode::FullAggregated, &net, &o).unwrap();
        let part: CentralityVector<f64> =
            centrality(Metric::Closeness, Mode::PartialAggregated, &net, &o).unwrap();
        assert_eq!(full.values, part.values);
    }

    #[test]
    fn edgeless_partial_eigenvector_scores_zero() {
        let net = TemporalNetwork::from_triples(&[(0, 1, 2), (1, 2, 3)]).unwrap();
        let o = Observation {
            t0: 0,
            tau: 3,
            phi_len: 1,
            hop_limit: 1,
            alpha: 1.0,
        };
        let e: CentralityVector<f64> =
            centrality(Metric::Eigenvector, Mode::PartialAggregated, &net, &o).unwrap();
        assert_eq!(e.values, vec![0.0; 3]);
    }
}
