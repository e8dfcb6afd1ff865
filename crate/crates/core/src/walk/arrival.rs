use super::check_alpha;
use crate::network::{NodeId, PartialTemporalNetwork, TemporalView, Timestep};
use crate::scalar::Scalar;

/// Earliest relative time at which each node is reached from the root by a
/// time-respecting walk of at most `hop_limit` hops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EarliestArrival {
    root: NodeId,
    hop_limit: usize,
    nodes: Vec<NodeId>,
    arrival: Vec<Option<Timestep>>,
}

impl EarliestArrival {
    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn hop_limit(&self) -> usize {
        self.hop_limit
    }

    /// Arrival time of `node`; `None` when unreachable, for the root, and for
    /// nodes outside the observed network.
    pub fn get(&self, node: NodeId) -> Option<Timestep> {
        self.nodes
            .binary_search(&node)
            .ok()
            .and_then(|i| self.arrival[i])
    }

    /// Reached nodes and their arrival times, excluding the root.
    pub fn reached(&self) -> impl Iterator<Item = (NodeId, Timestep)> + '_ {
        self.nodes
            .iter()
            .zip(&self.arrival)
            .filter_map(|(&n, a)| a.map(|t| (n, t)))
    }
}

/// Hop-layered earliest arrival: layer `k` only extends arrivals found with
/// at most `k - 1` hops, so contacts at one step never chain.
pub(crate) fn layered_arrival(
    view: &TemporalView<'_>,
    root: NodeId,
    hop_limit: usize,
    mut on_layer: impl FnMut(usize, &[Timestep], &[Timestep]),
) -> Vec<Timestep> {
    const NEVER: Timestep = Timestep::MAX;
    let mut best = vec![NEVER; view.n_nodes];
    best[root] = 0;
    let mut prev = best.clone();
    let max_layers = hop_limit.min(view.n_nodes.saturating_sub(1));
    for k in 1..=max_layers {
        prev.copy_from_slice(&best);
        for c in view.contacts {
            let t = c.t - view.origin;
            if prev[c.u] < t && t < best[c.v] {
                best[c.v] = t;
            }
            if prev[c.v] < t && t < best[c.u] {
                best[c.u] = t;
            }
        }
        on_layer(k, &prev, &best);
        if prev == best {
            break;
        }
    }
    best[root] = NEVER;
    best
}

pub fn earliest_arrival_view(view: &TemporalView<'_>, root: NodeId, hop_limit: usize) -> EarliestArrival {
    let best = layered_arrival(view, root, hop_limit, |_, _, _| {});
    EarliestArrival {
        root,
        hop_limit,
        nodes: (0..view.n_nodes).collect(),
        arrival: best
            .into_iter()
            .map(|t| (t != Timestep::MAX).then_some(t))
            .collect(),
    }
}

/// Earliest arrivals from the root of a partial network, in global ids.
pub fn earliest_arrival(pnet: &PartialTemporalNetwork) -> EarliestArrival {
    let local = earliest_arrival_view(&pnet.view(), pnet.root_local(), pnet.hop_limit());
    EarliestArrival {
        root: pnet.root(),
        hop_limit: pnet.hop_limit(),
        nodes: pnet.members().to_vec(),
        arrival: local.arrival,
    }
}

/// `z`: number of nodes other than the root with a finite arrival.
pub fn temporal_reachability(ea: &EarliestArrival) -> usize {
    ea.arrival.iter().filter(|a| a.is_some()).count()
}

/// `Z(α) = Σ_j α^arrival(j)`; equals `z` at `α = 1`.
///
/// # Panics
/// If `alpha` is outside `(0, 1]`.
pub fn time_scaled_reachability<S: Scalar>(ea: &EarliestArrival, alpha: S) -> S {
    check_alpha(alpha);
    if alpha == S::one() {
        return S::of_count(temporal_reachability(ea));
    }
    ea.arrival
        .iter()
        .flatten()
        .map(|&t| alpha.powi(t as i32))
        .sum()
}
