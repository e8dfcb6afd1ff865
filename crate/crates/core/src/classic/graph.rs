use std::collections::VecDeque;

use crate::network::{AggregatedNetwork, Contact, NodeId};

/// Unweighted, undirected simple graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaticGraph {
    adjacency: Vec<Vec<NodeId>>,
}

impl StaticGraph {
    pub fn from_edges(n_nodes: usize, edges: impl IntoIterator<Item = (NodeId, NodeId)>) -> Self {
        let mut adjacency = vec![Vec::new(); n_nodes];
        for (u, v) in edges {
            if u != v {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
        for row in &mut adjacency {
            row.sort_unstable();
            row.dedup();
        }
        StaticGraph { adjacency }
    }

    /// Drops the weights of an aggregate.
    pub fn from_aggregate(agg: &AggregatedNetwork) -> Self {
        StaticGraph {
            adjacency: (0..agg.n_nodes())
                .map(|u| agg.neighbors(u).iter().map(|&(v, _)| v).collect())
                .collect(),
        }
    }

    /// Graph of one snapshot's contacts.
    pub fn from_contacts(n_nodes: usize, contacts: &[Contact]) -> Self {
        Self::from_edges(n_nodes, contacts.iter().map(Contact::pair))
    }

    pub fn n_nodes(&self) -> usize {
        self.adjacency.len()
    }

    pub fn n_edges(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, node: NodeId) -> &[NodeId] {
        &self.adjacency[node]
    }

    pub fn degree(&self, node: NodeId) -> usize {
        self.adjacency[node].len()
    }

    /// Nodes of the largest connected component, ascending. Ties go to the
    /// component containing the smallest node id.
    pub fn largest_component(&self) -> Vec<NodeId> {
        let n = self.n_nodes();
        let mut label = vec![usize::MAX; n];
        let mut best = (0, 0);
        let mut queue = VecDeque::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = s;
            queue.push_back(s);
            let mut size = 0;
            while let Some(x) = queue.pop_front() {
                size += 1;
                for &y in &self.adjacency[x] {
                    if label[y] == usize::MAX {
                        label[y] = s;
                        queue.push_back(y);
                    }
                }
            }
            if size > best.0 {
                best = (size, s);
            }
        }
        (0..n).filter(|&x| label[x] == best.1 && best.0 > 0).collect()
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn components() {
        let g = StaticGraph::from_edges(6, [(4, 5), (2, 3), (0, 0)]);
        assert_eq!(g.n_edges(), 2);
        assert_eq!(g.largest_component(), vec![2, 3]);
        let g = StaticGraph::from_edges(6, [(4, 5), (2, 3), (3, 1)]);
        assert_eq!(g.largest_component(), vec![1, 2, 3]);
    }
}
