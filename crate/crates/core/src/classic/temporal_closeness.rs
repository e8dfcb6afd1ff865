use rayon::prelude::*;

use crate::network::{NodeId, TemporalView, Timestep};
use crate::scalar::Scalar;
use crate::walk::layered_arrival;

/// Minimum hop count of a time-respecting path from `root` to every node
/// within the view (`None` when unreachable, and for the root). Layers are
/// capped at `N - 1` hops.
pub fn temporal_hopcounts(view: &TemporalView<'_>, root: NodeId) -> Vec<Option<usize>> {
    let mut hops = vec![None; view.n_nodes];
    layered_arrival(view, root, usize::MAX, |k, before, after| {
        for (j, (b, a)) in before.iter().zip(after).enumerate() {
            if *b == Timestep::MAX && *a != Timestep::MAX {
                hops[j] = Some(k);
            }
        }
    });
    hops[root] = None;
    hops
}

/// `TC_root = Σ_{j≠root} 1 / TH(root, j)`.
pub fn temporal_closeness<S: Scalar>(view: &TemporalView<'_>, root: NodeId) -> S {
    temporal_hopcounts(view, root)
        .into_iter()
        .flatten()
        .map(|h| S::one() / S::of_count(h))
        .sum()
}

pub fn temporal_closeness_all<S: Scalar>(view: &TemporalView<'_>) -> Vec<S> {
    (0..view.n_nodes)
        .into_par_iter()
        .map(|root| temporal_closeness(view, root))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::TemporalNetwork;

    #[test]
    fn e1() {
        let net = TemporalNetwork::from_triples(&[(0, 1, 1), (1, 2, 2)]).unwrap();
        let v = net.full_view();
        assert_eq!(temporal_closeness::<f64>(&v, 0), 1.5);
        assert_eq!(temporal_closeness::<f64>(&v, 2), 1.0);
        assert_eq!(temporal_hopcounts(&v, 0), vec![None, Some(1), Some(2)]);
    }

    #[test]
    fn no_contacts() {
        let net = TemporalNetwork::new(3, []).unwrap();
        assert_eq!(temporal_closeness::<f64>(&net.full_view(), 1), 0.0);
    }

    #[test]
    fn min_hops_not_earliest_arrival() {
        // 0 reaches 3 early via 3 hops and late via a direct contact
        let net = TemporalNetwork::from_triples(&[(0, 1, 1), (1, 2, 2), (2, 3, 3), (0, 3, 9)]).unwrap();
        let h = temporal_hopcounts(&net.full_view(), 0);
        assert_eq!(h, vec![None, Some(1), Some(2), Some(1)]);
    }

    #[test]
    fn window_origin_respected() {
        let net = TemporalNetwork::from_triples(&[(0, 1, 1), (1, 2, 2)]).unwrap();
        // start at t0 = 1: the (0,1) contact is already in the past
        let v = net.view(1, 1);
        assert_eq!(temporal_closeness::<f64>(&v, 0), 0.0);
        assert_eq!(temporal_closeness::<f64>(&v, 1), 1.0);
    }
}
