use std::collections::VecDeque;

use super::{Contact, NodeId, TemporalNetwork, TemporalView, Timestep};
use crate::error::{Error, Result};

/// Local observation of a temporal network around one root node.
///
/// Internally the member nodes are re-indexed `0..|members|` (in ascending
/// global id order) and contact times are stored relative to the window
/// start, so the first usable step is 1.
#[derive(Clone, Debug)]
pub struct PartialTemporalNetwork {
    root: NodeId,
    root_local: NodeId,
    window_start: Timestep,
    window_len: Timestep,
    hop_limit: usize,
    members: Vec<NodeId>,
    local: TemporalNetwork,
}

impl PartialTemporalNetwork {
    pub(super) fn extract(
        net: &TemporalNetwork,
        root: NodeId,
        t0: Timestep,
        phi_len: Timestep,
        hop_limit: usize,
    ) -> Result<Self> {
        if root >= net.n_nodes() {
            return Err(Error::NodeOutOfRange {
                node: root,
                n_nodes: net.n_nodes(),
            });
        }
        if hop_limit == 0 {
            return Err(Error::InvalidParameter("hop limit must be at least 1".into()));
        }
        if u64::from(t0) + u64::from(phi_len) > u64::from(net.horizon()) {
            return Err(Error::InvalidWindow(format!(
                "({t0}, {}] exceeds horizon {}",
                u64::from(t0) + u64::from(phi_len),
                net.horizon()
            )));
        }
        let window = net.view(t0, phi_len);
        let agg = window.aggregate();

        let mut dist = vec![usize::MAX; net.n_nodes()];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            if dist[x] == hop_limit {
                continue;
            }
            for &(y, _) in agg.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }

        let mut local_id = vec![usize::MAX; net.n_nodes()];
        let mut members = Vec::new();
        for (node, &d) in dist.iter().enumerate() {
            if d != usize::MAX {
                local_id[node] = members.len();
                members.push(node);
            }
        }
        let contacts = window
            .contacts
            .iter()
            .filter(|c| local_id[c.u] != usize::MAX && local_id[c.v] != usize::MAX)
            .map(|c| Contact {
                u: local_id[c.u],
                v: local_id[c.v],
                t: c.t - t0,
            });
        let local = TemporalNetwork::new(members.len(), contacts)?.with_horizon(phi_len);
        Ok(PartialTemporalNetwork {
            root,
            root_local: local_id[root],
            window_start: t0,
            window_len: phi_len,
            hop_limit,
            members,
            local,
        })
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    /// Index of the root inside [`Self::local`].
    pub fn root_local(&self) -> NodeId {
        self.root_local
    }

    pub fn window_start(&self) -> Timestep {
        self.window_start
    }

    pub fn window_len(&self) -> Timestep {
        self.window_len
    }

    pub fn hop_limit(&self) -> usize {
        self.hop_limit
    }

    /// Global ids of the member nodes, ascending.
    pub fn members(&self) -> &[NodeId] {
        &self.members
    }

    /// The observation in local ids and relative time.
    pub fn local(&self) -> &TemporalNetwork {
        &self.local
    }

    pub fn view(&self) -> TemporalView<'_> {
        self.local.view(0, self.window_len)
    }

    pub fn global_id(&self, local: NodeId) -> NodeId {
        self.members[local]
    }

    /// Contacts in global ids and relative time.
    pub fn contacts_global(&self) -> Vec<Contact> {
        self.local
            .contacts()
            .iter()
            .map(|c| Contact {
                u: self.members[c.u],
                v: self.members[c.v],
                t: c.t,
            })
            .collect()
    }
}
