//! Names of the centralities and of the ways they are derived.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StaticMetric {
    Betweenness,
    Closeness,
    Eigenvector,
    PageRank,
}

impl StaticMetric {
    pub const ALL: [StaticMetric; 4] = [
        StaticMetric::Betweenness,
        StaticMetric::Closeness,
        StaticMetric::Eigenvector,
        StaticMetric::PageRank,
    ];
}

/// Every metric the toolkit can use as an influence predictor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Metric {
    /// Weighted degree mass `d`.
    DegreeMass,
    /// Time-scaled temporal degree mass `Δ(α)`.
    TemporalDegreeMass,
    /// Time-scaled temporal reachability `Z(α)`.
    TemporalReachability,
    Betweenness,
    Closeness,
    Eigenvector,
    PageRank,
    TemporalCloseness,
}

impl Metric {
    pub const ALL: [Metric; 8] = [
        Metric::DegreeMass,
        Metric::TemporalDegreeMass,
        Metric::TemporalReachability,
        Metric::Betweenness,
        Metric::Closeness,
        Metric::Eigenvector,
        Metric::PageRank,
        Metric::TemporalCloseness,
    ];

    pub const PROPOSED: [Metric; 3] = [
        Metric::DegreeMass,
        Metric::TemporalDegreeMass,
        Metric::TemporalReachability,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Metric::DegreeMass => "d",
            Metric::TemporalDegreeMass => "Delta",
            Metric::TemporalReachability => "Z",
            Metric::Betweenness => "betweenness",
            Metric::Closeness => "closeness",
            Metric::Eigenvector => "eigenvector",
            Metric::PageRank => "pagerank",
            Metric::TemporalCloseness => "temporal_closeness",
        }
    }

    pub fn as_static(self) -> Option<StaticMetric> {
        match self {
            Metric::Betweenness => Some(StaticMetric::Betweenness),
            Metric::Closeness => Some(StaticMetric::Closeness),
            Metric::Eigenvector => Some(StaticMetric::Eigenvector),
            Metric::PageRank => Some(StaticMetric::PageRank),
            _ => None,
        }
    }

    /// Whether the metric takes a time-scaling factor `α`.
    pub fn uses_alpha(self) -> bool {
        matches!(self, Metric::TemporalDegreeMass | Metric::TemporalReachability)
    }

    /// Derivation modes in which the metric is defined.
    pub fn modes(self) -> &'static [Mode] {
        match self {
            Metric::DegreeMass | Metric::TemporalDegreeMass | Metric::TemporalReachability => {
                &[Mode::Partial]
            }
            Metric::TemporalCloseness => &[Mode::FullTemporal, Mode::PartialTemporal],
            _ => &[
                Mode::FullAggregated,
                Mode::FullTemporal,
                Mode::PartialAggregated,
                Mode::PartialTemporal,
            ],
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Metric::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown metric {s:?}")))
    }
}

impl TryFrom<String> for Metric {
    type Error = Error;
    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

impl From<Metric> for String {
    fn from(m: Metric) -> String {
        m.name().to_string()
    }
}

/// How a metric is derived from the observed data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Mode {
    /// Walk metrics on each node's own partial temporal network.
    Partial,
    /// Static metric on the unweighted aggregate of the full window.
    FullAggregated,
    /// Snapshot average over the full window, or temporal closeness on it.
    FullTemporal,
    /// Static metric on the unweighted aggregate of each node's partial network.
    PartialAggregated,
    /// Snapshot average over, or temporal closeness on, each partial network.
    PartialTemporal,
}

impl Mode {
    pub const ALL: [Mode; 5] = [
        Mode::Partial,
        Mode::FullAggregated,
        Mode::FullTemporal,
        Mode::PartialAggregated,
        Mode::PartialTemporal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mode::Partial => "partial",
            Mode::FullAggregated => "full-aggregated",
            Mode::FullTemporal => "full-temporal",
            Mode::PartialAggregated => "partial-aggregated",
            Mode::PartialTemporal => "partial-temporal",
        }
    }

    /// Whether the mode observes a partial network (and so depends on φ, m).
    pub fn is_partial(self) -> bool {
        matches!(self, Mode::Partial | Mode::PartialAggregated | Mode::PartialTemporal)
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Mode::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown mode {s:?}")))
    }
}

impl TryFrom<String> for Mode {
    type Error = Error;
    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

impl From<Mode> for String {
    fn from(m: Mode) -> String {
        m.name().to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for m in Metric::ALL {
            assert_eq!(m.name().parse::<Metric>().unwrap(), m);
        }
        for m in Mode::ALL {
            assert_eq!(m.name().parse::<Mode>().unwrap(), m);
        }
        assert!("katz".parse::<Metric>().is_err());
    }
}
