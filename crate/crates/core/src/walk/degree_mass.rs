use super::check_exact;
use crate::error::{Error, Result};
use crate::network::{AggregatedNetwork, NodeId, PartialTemporalNetwork};
use crate::scalar::Scalar;

/// `Σ_{k=1..m} (W^k u)_root` via `m` sparse matrix-vector products.
pub fn weighted_degree_mass<S: Scalar>(
    agg: &AggregatedNetwork,
    root: NodeId,
    hop_limit: usize,
) -> Result<S> {
    if root >= agg.n_nodes() {
        return Err(Error::NodeOutOfRange {
            node: root,
            n_nodes: agg.n_nodes(),
        });
    }
    let mut x = vec![S::one(); agg.n_nodes()];
    let mut total = S::zero();
    for _ in 0..hop_limit {
        x = agg.mul_vec(&x);
        total += x[root];
        check_exact(total)?;
        if x[root] == S::zero() && x.iter().all(|v| *v == S::zero()) {
            break;
        }
    }
    Ok(total)
}

/// Weighted degree mass of the root in the aggregate of its own partial
/// network.
pub fn partial_weighted_degree_mass<S: Scalar>(pnet: &PartialTemporalNetwork) -> Result<S> {
    let agg = pnet.view().aggregate();
    weighted_degree_mass(&agg, pnet.root_local(), pnet.hop_limit())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::TemporalNetwork;

    #[test]
    fn hand_counts() {
        let e1 = TemporalNetwork::from_triples(&[(0, 1, 1), (1, 2, 2)]).unwrap();
        let e2 = TemporalNetwork::from_triples(&[(0, 1, 1), (0, 1, 2), (1, 2, 3)]).unwrap();
        let d: f64 = weighted_degree_mass(&e1.aggregate(1, 2), 0, 2).unwrap();
        assert_eq!(d, 3.0);
        let d: f64 = weighted_degree_mass(&e2.aggregate(1, 3), 0, 2).unwrap();
        assert_eq!(d, 8.0);
        let d: f32 = weighted_degree_mass(&e2.aggregate(1, 3), 0, 2).unwrap();
        assert_eq!(d, 8.0);
    }

    #[test]
    fn isolated_node() {
        let net = TemporalNetwork::new(4, [crate::network::Contact { u: 0, v: 1, t: 1 }]).unwrap();
        for m in 1..5 {
            let d: f64 = weighted_degree_mass(&net.aggregate(1, 1), 3, m).unwrap();
            assert_eq!(d, 0.0);
        }
    }

    #[test]
    fn precision_guard() {
        // a single heavy edge: walk counts grow as w^k
        let triples: Vec<_> = (1..=300).map(|t| (0, 1, t)).collect();
        let net = TemporalNetwork::from_triples(&triples).unwrap();
        let agg = net.aggregate(1, 300);
        assert!(weighted_degree_mass::<f64>(&agg, 0, 6).is_ok());
        assert!(matches!(
            weighted_degree_mass::<f64>(&agg, 0, 7),
            Err(Error::PrecisionLoss { .. })
        ));
        assert!(weighted_degree_mass::<f32>(&agg, 0, 3).is_err());
    }
}
