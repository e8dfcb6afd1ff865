use std::collections::VecDeque;

use super::StaticGraph;
use crate::scalar::Scalar;

/// Shortest-path betweenness summed over ordered source/target pairs,
/// using Brandes' single-source dependency accumulation. Unnormalized.
pub fn betweenness<S: Scalar>(g: &StaticGraph) -> Vec<S> {
    let n = g.n_nodes();
    let mut score = vec![S::zero(); n];
    let mut sigma = vec![S::zero(); n];
    let mut dist = vec![usize::MAX; n];
    let mut delta = vec![S::zero(); n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();

    for s in (0..n).filter(|&s| g.degree(s) > 0) {
        sigma[s] = S::one();
        dist[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    let sv = sigma[v];
                    sigma[w] += sv;
                }
            }
        }
        // predecessors of w are the neighbors one step closer to s
        for &w in order.iter().rev() {
            for &v in g.neighbors(w) {
                if dist[v] != usize::MAX && dist[v] + 1 == dist[w] {
                    let c = sigma[v] / sigma[w] * (S::one() + delta[w]);
                    delta[v] += c;
                }
            }
            if w != s {
                score[w] += delta[w];
            }
        }
        for &v in &order {
            sigma[v] = S::zero();
            dist[v] = usize::MAX;
            delta[v] = S::zero();
        }
        order.clear();
    }
    score
}

#[cfg(test)]
mod tests {
    use super::super::graph::fixtures::*;
    use super::*;

    #[test]
    fn path() {
        assert_eq!(betweenness::<f64>(&path3()), vec![0.0, 2.0, 0.0]);
    }

    #[test]
    fn complete_graph() {
        assert!(betweenness::<f64>(&complete(4)).iter().all(|&b| b == 0.0));
    }

    #[test]
    fn star3() {
        assert_eq!(betweenness::<f64>(&star(3)), vec![6.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn square_splits_paths() {
        let g = StaticGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        // each opposite pair has two shortest paths, both directions
        assert_eq!(betweenness::<f64>(&g), vec![1.0; 4]);
    }
}
