use std::collections::BTreeMap;

use super::WalkCensus;
use crate::error::{Error, Result};
use crate::network::{Contact, NodeId, PartialTemporalNetwork, Timestep};
use crate::scalar::Scalar;

pub const ORACLE_MAX_CONTACTS: usize = 30;
pub const ORACLE_MAX_HOPS: usize = 4;

/// Enumerates every time-respecting walk of the root explicitly, one
/// contact sequence at a time. Exponential; intended as a reference for
/// [`super::walk_census`] on small instances.
pub fn brute_force_walk_oracle<S: Scalar>(pnet: &PartialTemporalNetwork) -> Result<WalkCensus<S>> {
    let contacts = pnet.contacts_global();
    if contacts.len() > ORACLE_MAX_CONTACTS || pnet.hop_limit() > ORACLE_MAX_HOPS {
        return Err(Error::InstanceTooLarge(format!(
            "{} contacts, {} hops (limits {ORACLE_MAX_CONTACTS}, {ORACLE_MAX_HOPS})",
            contacts.len(),
            pnet.hop_limit()
        )));
    }
    let mut counts = BTreeMap::new();
    extend(&contacts, pnet.root(), 0, 0, pnet.hop_limit(), &mut counts);
    Ok(WalkCensus::from_map(
        pnet.root(),
        pnet.hop_limit(),
        counts
            .into_iter()
            .map(|(k, n): (_, u64)| (k, S::from_f64_lossy(n as f64)))
            .collect(),
    ))
}

fn extend(
    contacts: &[Contact],
    at: NodeId,
    since: Timestep,
    hops: usize,
    limit: usize,
    counts: &mut BTreeMap<(NodeId, usize, Timestep), u64>,
) {
    if hops == limit {
        return;
    }
    for c in contacts.iter().filter(|c| c.t > since) {
        if let Some(next) = c.other(at) {
            *counts.entry((next, hops + 1, c.t)).or_insert(0) += 1;
            extend(contacts, next, c.t, hops + 1, limit, counts);
        }
    }
}
