use std::collections::VecDeque;

use super::StaticGraph;
use crate::scalar::Scalar;

/// Harmonic closeness `Σ_{j≠i} 1 / H(i, j)`, unreachable pairs adding 0.
pub fn closeness<S: Scalar>(g: &StaticGraph) -> Vec<S> {
    let n = g.n_nodes();
    let mut score = vec![S::zero(); n];
    let mut dist = vec![usize::MAX; n];
    let mut seen = Vec::new();
    let mut queue = VecDeque::new();
    for s in (0..n).filter(|&s| g.degree(s) > 0) {
        dist[s] = 0;
        queue.push_back(s);
        let mut total = S::zero();
        while let Some(v) = queue.pop_front() {
            seen.push(v);
            if v != s {
                total += S::one() / S::of_count(dist[v]);
            }
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        score[s] = total;
        for v in seen.drain(..) {
            dist[v] = usize::MAX;
        }
    }
    score
}

#[cfg(test)]
mod tests {
    use super::super::graph::fixtures::*;
    use super::*;

    #[test]
    fn path() {
        assert_eq!(closeness::<f64>(&path3()), vec![1.5, 2.0, 1.5]);
    }

    #[test]
    fn complete_is_n_minus_one() {
        assert_eq!(closeness::<f64>(&complete(3)), vec![2.0; 3]);
        assert_eq!(closeness::<f32>(&complete(6)), vec![5.0; 6]);
    }

    #[test]
    fn isolated_node() {
        let g = StaticGraph::from_edges(3, [(0, 1)]);
        assert_eq!(closeness::<f64>(&g), vec![1.0, 1.0, 0.0]);
    }
}
