use super::{Contact, NodeId};
use crate::scalar::Scalar;

/// Symmetric weighted adjacency: `w(u, v)` counts the timesteps at which
/// `u` and `v` were in contact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AggregatedNetwork {
    n_nodes: usize,
    // neighbor lists sorted by neighbor id
    adjacency: Vec<Vec<(NodeId, u32)>>,
}

impl AggregatedNetwork {
    pub fn from_contacts(n_nodes: usize, contacts: &[Contact]) -> Self {
        let mut adjacency: Vec<Vec<(NodeId, u32)>> = vec![Vec::new(); n_nodes];
        for c in contacts {
            adjacency[c.u].push((c.v, 1));
            adjacency[c.v].push((c.u, 1));
        }
        for row in &mut adjacency {
            row.sort_unstable_by_key(|&(j, _)| j);
            row.dedup_by(|next, kept| {
                if next.0 == kept.0 {
                    kept.1 += next.1;
                    true
                } else {
                    false
                }
            });
        }
        AggregatedNetwork { n_nodes, adjacency }
    }

    pub fn n_nodes(&self) -> usize {
        self.n_nodes
    }

    pub fn neighbors(&self, node: NodeId) -> &[(NodeId, u32)] {
        &self.adjacency[node]
    }

    pub fn degree(&self, node: NodeId) -> usize {
        self.adjacency[node].len()
    }

    pub fn weight(&self, u: NodeId, v: NodeId) -> u32 {
        let row = &self.adjacency[u];
        row.binary_search_by_key(&v, |&(j, _)| j)
            .map_or(0, |i| row[i].1)
    }

    /// Edges `(u, v, w)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId, u32)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, row)| {
            row.iter()
                .filter(move |&&(v, _)| u < v)
                .map(move |&(v, w)| (u, v, w))
        })
    }

    pub fn n_edges(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn total_weight(&self) -> u64 {
        self.edges().map(|(_, _, w)| u64::from(w)).sum()
    }

    /// `y = W x`.
    pub fn mul_vec<S: Scalar>(&self, x: &[S]) -> Vec<S> {
        self.adjacency
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&(j, w)| S::from_u32(w).unwrap() * x[j])
                    .sum()
            })
            .collect()
    }
}
