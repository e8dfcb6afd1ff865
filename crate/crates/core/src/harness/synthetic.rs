use std::collections::HashSet;

use rand::distributions::{Distribution, WeightedIndex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::network::{Contact, TemporalNetwork, Timestep};

/// Planted-community contact generator.
///
/// Nodes are split into equal communities. Each node draws a heavy-tailed
/// activity and a short list of regular partners inside its community.
/// Every contact picks an initiator by activity, then a regular partner,
/// another member of its community or, rarely, anyone. Contact times are
/// uniform over `1..=horizon`.
#[derive(Clone, Debug, PartialEq)]
pub struct SyntheticSpec {
    pub n_nodes: usize,
    pub n_contacts: usize,
    pub horizon: Timestep,
    pub communities: usize,
    /// Tail exponent of the activity distribution.
    pub activity_exponent: f64,
    pub partners: usize,
    pub p_partner: f64,
    pub p_community: f64,
    pub seed: u64,
}

impl Default for SyntheticSpec {
    fn default() -> Self {
        SyntheticSpec {
            n_nodes: 150,
            n_contacts: 5000,
            horizon: 2000,
            communities: 5,
            activity_exponent: 2.2,
            partners: 2,
            p_partner: 0.7,
            p_community: 0.25,
            seed: 1,
        }
    }
}

/// Draws a network from the spec; the same spec always gives the same
/// network.
pub fn planted_communities(spec: &SyntheticSpec) -> Result<TemporalNetwork> {
    let n = spec.n_nodes;
    let k = spec.communities.max(1);
    if n < 2 * k || spec.horizon == 0 {
        return Err(Error::InvalidParameter("need at least two nodes per community and T >= 1".into()));
    }
    let capacity = (n * (n - 1) / 2) as u64 * u64::from(spec.horizon);
    if spec.n_contacts as u64 > capacity / 2 {
        return Err(Error::InvalidParameter("too many contacts for the node count and horizon".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let community = |i: usize| i * k / n;
    let members: Vec<Vec<usize>> = (0..k).map(|c| (0..n).filter(|&i| community(i) == c).collect()).collect();
    let activity: Vec<f64> = (0..n)
        .map(|_| (1.0 - rng.gen::<f64>()).powf(-1.0 / (spec.activity_exponent - 1.0)).min(50.0))
        .collect();
    let initiator = WeightedIndex::new(&activity).expect("positive activities");
    let partners: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let own = &members[community(i)];
            (0..spec.partners)
                .map(|_| loop {
                    let j = own[rng.gen_range(0..own.len())];
                    if j != i {
                        break j;
                    }
                })
                .collect()
        })
        .collect();

    let mut seen = HashSet::new();
    let mut contacts = Vec::with_capacity(spec.n_contacts);
    while contacts.len() < spec.n_contacts {
        let u = initiator.sample(&mut rng);
        let r: f64 = rng.gen();
        let v = if r < spec.p_partner && !partners[u].is_empty() {
            partners[u][rng.gen_range(0..partners[u].len())]
        } else if r < spec.p_partner + spec.p_community {
            let own = &members[community(u)];
            own[rng.gen_range(0..own.len())]
        } else {
            rng.gen_range(0..n)
        };
        let t = rng.gen_range(1..=spec.horizon);
        if let Some(c) = Contact::new(u, v, t) {
            if seen.insert(c) {
                contacts.push(c);
            }
        }
    }
    TemporalNetwork::new(n, contacts)
}
