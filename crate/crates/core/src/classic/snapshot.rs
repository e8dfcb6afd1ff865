use super::{static_metric, StaticGraph};
use crate::error::{Error, Result};
use crate::metric::StaticMetric;
use crate::network::TemporalView;
use crate::scalar::Scalar;

/// Arithmetic mean of a static metric over every timestep of the view.
/// Nodes without a contact are isolated in a snapshot; an edgeless
/// snapshot contributes zeros for eigenvector centrality.
pub fn snapshot_average<S: Scalar>(metric: StaticMetric, view: &TemporalView<'_>) -> Result<Vec<S>> {
    let n = view.n_nodes;
    if view.len == 0 {
        return Err(Error::InvalidWindow("empty snapshot window".into()));
    }
    let mut sum = vec![S::zero(); n];
    let mut nonempty = 0usize;
    for (_, contacts) in view.snapshots() {
        nonempty += 1;
        let g = StaticGraph::from_contacts(n, contacts);
        for (acc, v) in sum.iter_mut().zip(static_metric::<S>(metric, &g)?) {
            *acc += v;
        }
    }
    let empty = view.len as usize - nonempty;
    if empty > 0 {
        let blank = edgeless_value::<S>(metric, n)?;
        for (acc, v) in sum.iter_mut().zip(blank) {
            *acc += v * S::of_count(empty);
        }
    }
    let steps = S::of_count(view.len as usize);
    Ok(sum.into_iter().map(|s| s / steps).collect())
}

pub(crate) fn edgeless_value<S: Scalar>(metric: StaticMetric, n: usize) -> Result<Vec<S>> {
    match metric {
        StaticMetric::Eigenvector => Ok(vec![S::zero(); n]),
        _ => static_metric(metric, &StaticGraph::from_edges(n, [])),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classic::pagerank;
    use crate::network::TemporalNetwork;
    use approx::assert_abs_diff_eq;

    fn e1() -> TemporalNetwork {
        TemporalNetwork::from_triples(&[(0, 1, 1), (1, 2, 2)]).unwrap()
    }

    #[test]
    fn closeness_average() {
        let c: Vec<f64> = snapshot_average(StaticMetric::Closeness, &e1().full_view()).unwrap();
        assert_eq!(c, vec![0.5, 1.0, 0.5]);
    }

    #[test]
    fn single_snapshot_is_static() {
        let net = TemporalNetwork::from_triples(&[(0, 1, 1), (1, 2, 1), (2, 3, 1)]).unwrap();
        let g = StaticGraph::from_contacts(4, net.contacts());
        for m in StaticMetric::ALL {
            let avg: Vec<f64> = snapshot_average(m, &net.full_view()).unwrap();
            let direct: Vec<f64> = static_metric(m, &g).unwrap();
            for (a, b) in avg.iter().zip(&direct) {
                assert_abs_diff_eq!(a, b, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn pagerank_average() {
        let net = e1();
        let s1 = StaticGraph::from_edges(3, [(0, 1)]);
        let s2 = StaticGraph::from_edges(3, [(1, 2)]);
        let p1: Vec<f64> = pagerank(&s1, 0.85, 1e-13, 100_000).unwrap();
        let p2: Vec<f64> = pagerank(&s2, 0.85, 1e-13, 100_000).unwrap();
        let avg: Vec<f64> = snapshot_average(StaticMetric::PageRank, &net.full_view()).unwrap();
        for i in 0..3 {
            assert_abs_diff_eq!(avg[i], (p1[i] + p2[i]) / 2.0, epsilon = 1e-11);
        }
        // hand solution of the 3-node snapshot: pair nodes x, isolated y
        // x = a + γ/3·y + γ x, y = a + γ/3·y, a = 0.05
        let y = 0.05 / (1.0 - 0.85 / 3.0);
        let x = (0.05 + 0.85 / 3.0 * y) / 0.15;
        assert_abs_diff_eq!(p1[0], x, epsilon = 1e-10);
        assert_abs_diff_eq!(avg[1], x, epsilon = 1e-10);
        assert_abs_diff_eq!(avg[0], (x + y) / 2.0, epsilon = 1e-10);
    }

    #[test]
    fn empty_steps_and_eigenvector() {
        // window of 4 steps, contacts only at step 2
        let net = TemporalNetwork::from_triples(&[(0, 1, 2), (1, 2, 5)]).unwrap();
        let v = net.view(0, 4);
        let c: Vec<f64> = snapshot_average(StaticMetric::Closeness, &v).unwrap();
        assert_eq!(c, vec![0.25, 0.25, 0.0]);
        let e: Vec<f64> = snapshot_average(StaticMetric::Eigenvector, &v).unwrap();
        assert_abs_diff_eq!(e[0], 0.5f64.sqrt() / 4.0, epsilon = 1e-9);
        assert_eq!(e[2], 0.0);
    }
}
