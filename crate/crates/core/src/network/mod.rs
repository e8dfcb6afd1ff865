//! Temporal contact networks and the views derived from them.
//!
//! A [`TemporalNetwork`] is a time-sorted set of undirected, binary contacts
//! `(u, v, t)` over dense node ids `0..N` and timesteps `1..=T`. Windows of a
//! network are handed to the metric code as borrowed [`TemporalView`]s.

mod aggregate;
mod ingest;
mod partial;
mod shuffle;

use std::cmp::Ordering;
use std::collections::VecDeque;

pub use aggregate::AggregatedNetwork;
pub use ingest::{parse_contact_list, parse_contacts, write_edge_list, write_remap, EdgeListFormat, IngestReport};
pub use partial::PartialTemporalNetwork;

use crate::error::{Error, Result};

pub type NodeId = usize;
pub type Timestep = u32;

/// One undirected contact, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Contact {
    pub u: NodeId,
    pub v: NodeId,
    pub t: Timestep,
}

impl Contact {
    /// Canonicalizes the endpoint order. Returns `None` for a self-loop.
    pub fn new(a: NodeId, b: NodeId, t: Timestep) -> Option<Self> {
        match a.cmp(&b) {
            Ordering::Less => Some(Contact { u: a, v: b, t }),
            Ordering::Greater => Some(Contact { u: b, v: a, t }),
            Ordering::Equal => None,
        }
    }

    pub fn pair(&self) -> (NodeId, NodeId) {
        (self.u, self.v)
    }

    /// The endpoint opposite `node`, if `node` is an endpoint.
    pub fn other(&self, node: NodeId) -> Option<NodeId> {
        if node == self.u {
            Some(self.v)
        } else if node == self.v {
            Some(self.u)
        } else {
            None
        }
    }
}

impl PartialOrd for Contact {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// Time-major so that sorted contact vectors are in chronological order.
impl Ord for Contact {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.t, self.u, self.v).cmp(&(other.t, other.u, other.v))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TemporalNetwork {
    n_nodes: usize,
    horizon: Timestep,
    contacts: Vec<Contact>,
    labels: Vec<String>,
}

impl TemporalNetwork {
    /// Builds a network from raw contacts. Contacts are canonicalized,
    /// sorted by time and deduplicated; self-loops, `t = 0` and out-of-range
    /// node ids are errors.
    pub fn new(n_nodes: usize, contacts: impl IntoIterator<Item = Contact>) -> Result<Self> {
        let mut out = Vec::new();
        for c in contacts {
            let c = Contact::new(c.u, c.v, c.t).ok_or_else(|| {
                Error::InvalidParameter(format!("self-loop contact on node {}", c.u))
            })?;
            if c.v >= n_nodes {
                return Err(Error::NodeOutOfRange { node: c.v, n_nodes });
            }
            if c.t == 0 {
                return Err(Error::InvalidParameter("timesteps start at 1".into()));
            }
            out.push(c);
        }
        out.sort_unstable();
        out.dedup();
        let horizon = out.last().map_or(0, |c| c.t);
        let labels = (0..n_nodes).map(|i| i.to_string()).collect();
        Ok(TemporalNetwork {
            n_nodes,
            horizon,
            contacts: out,
            labels,
        })
    }

    /// Convenience constructor from `(u, v, t)` triples; `N` is one past the
    /// largest id seen.
    pub fn from_triples(triples: &[(NodeId, NodeId, Timestep)]) -> Result<Self> {
        let n = triples.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0);
        Self::new(n, triples.iter().map(|&(u, v, t)| Contact { u, v, t }))
    }

    pub(crate) fn with_labels(mut self, labels: Vec<String>) -> Self {
        debug_assert_eq!(labels.len(), self.n_nodes);
        self.labels = labels;
        self
    }

    pub(crate) fn with_horizon(mut self, horizon: Timestep) -> Self {
        debug_assert!(self.contacts.last().is_none_or(|c| c.t <= horizon));
        self.horizon = horizon;
        self
    }

    pub fn n_nodes(&self) -> usize {
        self.n_nodes
    }

    /// Largest timestep `T`.
    pub fn horizon(&self) -> Timestep {
        self.horizon
    }

    pub fn contacts(&self) -> &[Contact] {
        &self.contacts
    }

    pub fn n_contacts(&self) -> usize {
        self.contacts.len()
    }

    /// Original identifier of every dense node id.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Contacts with `a <= t <= b`.
    pub fn contacts_between(&self, a: Timestep, b: Timestep) -> &[Contact] {
        if a > b {
            return &[];
        }
        let lo = self.contacts.partition_point(|c| c.t < a);
        let hi = self.contacts.partition_point(|c| c.t <= b);
        &self.contacts[lo..hi]
    }

    /// View of the contacts in `(origin, origin + len]`, i.e. what a process
    /// started at `origin` can use.
    pub fn view(&self, origin: Timestep, len: Timestep) -> TemporalView<'_> {
        TemporalView {
            n_nodes: self.n_nodes,
            origin,
            len,
            contacts: self.contacts_between(origin.saturating_add(1), origin.saturating_add(len)),
        }
    }

    /// View over the whole horizon, started at time 0.
    pub fn full_view(&self) -> TemporalView<'_> {
        self.view(0, self.horizon)
    }

    /// Relabels timesteps to `1..=T'` keeping only steps that carry contacts.
    pub fn compact_timesteps(&self) -> Result<Self> {
        if self.contacts.is_empty() {
            return Err(Error::EmptyNetwork);
        }
        let mut next = 0;
        let mut last = None;
        let contacts: Vec<Contact> = self
            .contacts
            .iter()
            .map(|c| {
                if last != Some(c.t) {
                    last = Some(c.t);
                    next += 1;
                }
                Contact { t: next, ..*c }
            })
            .collect();
        Ok(TemporalNetwork {
            n_nodes: self.n_nodes,
            horizon: next,
            contacts,
            labels: self.labels.clone(),
        })
    }

    /// Restricts the network to the largest connected component of its
    /// full-horizon aggregate, re-densifying ids (order preserved) and
    /// re-compacting time. Equal-size components are broken in favor of the
    /// one holding the smallest node id.
    pub fn largest_connected_component(&self) -> Result<Self> {
        if self.contacts.is_empty() {
            return Err(Error::EmptyNetwork);
        }
        let agg = self.aggregate(1, self.horizon);
        let mut component = vec![usize::MAX; self.n_nodes];
        let mut best: Option<(usize, usize)> = None; // (size, label)
        let mut queue = VecDeque::new();
        for start in 0..self.n_nodes {
            if component[start] != usize::MAX {
                continue;
            }
            component[start] = start;
            queue.push_back(start);
            let mut size = 0;
            while let Some(x) = queue.pop_front() {
                size += 1;
                for &(y, _) in agg.neighbors(x) {
                    if component[y] == usize::MAX {
                        component[y] = start;
                        queue.push_back(y);
                    }
                }
            }
            // `start` is the smallest id of its component, so strict `>`
            // keeps the earliest component on ties.
            if best.is_none_or(|(s, _)| size > s) {
                best = Some((size, start));
            }
        }
        let keep = best.map(|(_, label)| label).unwrap_or(0);
        let mut remap = vec![usize::MAX; self.n_nodes];
        let mut labels = Vec::new();
        for (node, &comp) in component.iter().enumerate() {
            if comp == keep {
                remap[node] = labels.len();
                labels.push(self.labels[node].clone());
            }
        }
        let contacts = self
            .contacts
            .iter()
            .filter(|c| component[c.u] == keep)
            .map(|c| Contact {
                u: remap[c.u],
                v: remap[c.v],
                t: c.t,
            });
        TemporalNetwork::new(labels.len(), contacts)?
            .with_labels(labels)
            .compact_timesteps()
    }

    /// Weighted aggregate over the inclusive window `[a, b]`.
    pub fn aggregate(&self, a: Timestep, b: Timestep) -> AggregatedNetwork {
        AggregatedNetwork::from_contacts(self.n_nodes, self.contacts_between(a, b))
    }

    /// Ego observation of `root`: contacts in `(t0, t0 + phi_len]` among the
    /// nodes within `hop_limit` hops of `root` in that window's aggregate.
    pub fn extract_partial(
        &self,
        root: NodeId,
        t0: Timestep,
        phi_len: Timestep,
        hop_limit: usize,
    ) -> Result<PartialTemporalNetwork> {
        PartialTemporalNetwork::extract(self, root, t0, phi_len, hop_limit)
    }

    /// Null model keeping every contact's node pair and permuting timestamps.
    pub fn shuffle_timestamps<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Result<Self> {
        shuffle::shuffle_timestamps(self, rng)
    }
}

/// Borrowed window of a temporal network: contacts with
/// `origin < t <= origin + len`, in chronological order.
#[derive(Clone, Copy, Debug)]
pub struct TemporalView<'a> {
    pub n_nodes: usize,
    pub origin: Timestep,
    pub len: Timestep,
    pub contacts: &'a [Contact],
}

impl<'a> TemporalView<'a> {
    /// Time of a contact relative to the origin (first usable step is 1).
    pub fn relative(&self, c: &Contact) -> Timestep {
        c.t - self.origin
    }

    /// Contacts grouped by timestep, in chronological order.
    pub fn snapshots(&self) -> impl Iterator<Item = (Timestep, &'a [Contact])> + 'a {
        let mut rest = self.contacts;
        std::iter::from_fn(move || {
            let first = rest.first()?;
            let end = rest.partition_point(|c| c.t == first.t);
            let (head, tail) = rest.split_at(end);
            rest = tail;
            Some((first.t, head))
        })
    }

    pub fn aggregate(&self) -> AggregatedNetwork {
        AggregatedNetwork::from_contacts(self.n_nodes, self.contacts)
    }
}
