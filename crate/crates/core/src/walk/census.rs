use std::collections::BTreeMap;

use super::{check_alpha, check_exact};
use crate::error::{Error, Result};
use crate::network::{NodeId, PartialTemporalNetwork, TemporalView, Timestep};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CensusEntry<S> {
    pub node: NodeId,
    pub hops: usize,
    /// Relative time of the walk's last contact.
    pub time: Timestep,
    pub count: S,
}

/// Number of time-respecting walks from a root, keyed by end node, hop
/// count and end time. Only nonzero entries are stored, sorted by
/// `(node, hops, time)`.
#[derive(Clone, Debug, PartialEq)]
pub struct WalkCensus<S> {
    pub(crate) root: NodeId,
    pub(crate) hop_limit: usize,
    pub(crate) entries: Vec<CensusEntry<S>>,
}

impl<S: Scalar> WalkCensus<S> {
    pub(crate) fn from_map(
        root: NodeId,
        hop_limit: usize,
        map: BTreeMap<(NodeId, usize, Timestep), S>,
    ) -> Self {
        let entries = map
            .into_iter()
            .filter(|(_, c)| *c > S::zero())
            .map(|((node, hops, time), count)| CensusEntry {
                node,
                hops,
                time,
                count,
            })
            .collect();
        WalkCensus {
            root,
            hop_limit,
            entries,
        }
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn hop_limit(&self) -> usize {
        self.hop_limit
    }

    pub fn entries(&self) -> &[CensusEntry<S>] {
        &self.entries
    }

    pub fn count(&self, node: NodeId, hops: usize, time: Timestep) -> S {
        self.entries
            .binary_search_by(|e| (e.node, e.hops, e.time).cmp(&(node, hops, time)))
            .map_or(S::zero(), |i| self.entries[i].count)
    }

    /// Total number of walks ending at `node`.
    pub fn walks_to(&self, node: NodeId) -> S {
        self.entries
            .iter()
            .filter(|e| e.node == node)
            .map(|e| e.count)
            .sum()
    }

    fn remap(mut self, ids: &[NodeId]) -> Self {
        self.root = ids[self.root];
        for e in &mut self.entries {
            e.node = ids[e.node];
        }
        self.entries.sort_unstable_by_key(|e| (e.node, e.hops, e.time));
        self
    }
}

/// Census of the root's time-respecting walks in its partial network,
/// reported in global node ids.
pub fn walk_census<S: Scalar>(pnet: &PartialTemporalNetwork) -> Result<WalkCensus<S>> {
    Ok(walk_census_view(&pnet.view(), pnet.root_local(), pnet.hop_limit())?.remap(pnet.members()))
}

/// Dynamic program over the view's contacts in time order:
/// `f_1(j, t) = [(root, j, t) is a contact]` and
/// `f_k(j, t) = Σ_{(u, j, t)} Σ_{t' < t} f_{k-1}(u, t')`.
pub fn walk_census_view<S: Scalar>(
    view: &TemporalView<'_>,
    root: NodeId,
    hop_limit: usize,
) -> Result<WalkCensus<S>> {
    if root >= view.n_nodes {
        return Err(Error::NodeOutOfRange {
            node: root,
            n_nodes: view.n_nodes,
        });
    }
    // earlier[k][u] = Σ_{t' < current step} f_k(u, t'); layer 0 is the seed.
    let mut earlier = vec![vec![S::zero(); view.n_nodes]; hop_limit];
    if hop_limit > 0 {
        earlier[0][root] = S::one();
    }
    let mut census = BTreeMap::new();
    let mut step: BTreeMap<(usize, NodeId), S> = BTreeMap::new();
    for (t, snapshot) in view.snapshots() {
        let rel = t - view.origin;
        step.clear();
        for c in snapshot {
            for k in 1..=hop_limit {
                let layer = &earlier[k - 1];
                for (from, to) in [(c.u, c.v), (c.v, c.u)] {
                    let w = layer[from];
                    if w > S::zero() {
                        *step.entry((k, to)).or_insert_with(S::zero) += w;
                    }
                }
            }
        }
        for (&(k, node), &count) in &step {
            check_exact(count)?;
            if k < hop_limit {
                earlier[k][node] += count;
                check_exact(earlier[k][node])?;
            }
            census.insert((node, k, rel), count);
        }
    }
    Ok(WalkCensus::from_map(root, hop_limit, census))
}

/// `δ`: number of time-respecting walks of at most `m` hops, including
/// those that return to the root.
pub fn temporal_degree_mass<S: Scalar>(census: &WalkCensus<S>) -> S {
    census.entries.iter().map(|e| e.count).sum()
}

/// `Δ(α) = Σ count · α^time`; equals `δ` at `α = 1`.
///
/// # Panics
/// If `alpha` is outside `(0, 1]`.
pub fn time_scaled_degree_mass<S: Scalar>(census: &WalkCensus<S>, alpha: S) -> S {
    check_alpha(alpha);
    if alpha == S::one() {
        return temporal_degree_mass(census);
    }
    census
        .entries
        .iter()
        .map(|e| e.count * alpha.powi(e.time as i32))
        .sum()
}
