use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{Contact, TemporalNetwork};
use crate::error::{Error, Result};

const MAX_RETRIES: usize = 1_000_000;

/// Permutes timestamps across contacts uniformly at random. A permutation
/// that would place two contacts of the same pair at the same step is
/// repaired by re-drawing swap partners for the colliding contacts.
pub(super) fn shuffle_timestamps<R: Rng + ?Sized>(
    net: &TemporalNetwork,
    rng: &mut R,
) -> Result<TemporalNetwork> {
    let pairs: Vec<(usize, usize)> = net.contacts().iter().map(Contact::pair).collect();
    let mut times: Vec<_> = net.contacts().iter().map(|c| c.t).collect();
    times.shuffle(rng);

    let mut slots: HashMap<(usize, usize, u32), u32> = HashMap::with_capacity(pairs.len());
    let mut colliding = Vec::new();
    for (i, (&(u, v), &t)) in pairs.iter().zip(&times).enumerate() {
        let count = slots.entry((u, v, t)).or_insert(0);
        *count += 1;
        if *count > 1 {
            colliding.push(i);
        }
    }

    let mut retries = 0;
    let n = pairs.len();
    for i in colliding {
        let (ui, vi) = pairs[i];
        while slots[&(ui, vi, times[i])] > 1 {
            if retries >= MAX_RETRIES {
                return Err(Error::ShuffleExhausted(retries));
            }
            retries += 1;
            let j = rng.gen_range(0..n);
            let (uj, vj) = pairs[j];
            if (uj, vj) == (ui, vi) {
                continue;
            }
            let (ti, tj) = (times[i], times[j]);
            let free = |key| slots.get(&key).is_none_or(|&c| c == 0);
            if !free((ui, vi, tj)) || !free((uj, vj, ti)) {
                continue;
            }
            *slots.get_mut(&(ui, vi, ti)).unwrap() -= 1;
            *slots.get_mut(&(uj, vj, tj)).unwrap() -= 1;
            *slots.entry((ui, vi, tj)).or_insert(0) += 1;
            *slots.entry((uj, vj, ti)).or_insert(0) += 1;
            times.swap(i, j);
        }
    }

    let contacts = pairs
        .into_iter()
        .zip(times)
        .map(|((u, v), t)| Contact { u, v, t });
    Ok(TemporalNetwork::new(net.n_nodes(), contacts)?
        .with_labels(net.labels().to_vec())
        .with_horizon(net.horizon()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn single_contact_unchanged() {
        let net = TemporalNetwork::from_triples(&[(0, 1, 4)]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(net.shuffle_timestamps(&mut rng).unwrap(), net);
    }

    #[test]
    fn heavy_collision_pressure() {
        // one pair active at most steps: nearly every draw collides
        let mut triples: Vec<_> = (1..=40).map(|t| (0, 1, t)).collect();
        triples.extend((1..=5).map(|t| (1, 2, t * 7)));
        let net = TemporalNetwork::from_triples(&triples).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let s = net.shuffle_timestamps(&mut rng).unwrap();
            assert_eq!(s.n_contacts(), net.n_contacts());
            assert_eq!(s.aggregate(1, s.horizon()), net.aggregate(1, net.horizon()));
        }
    }
}
