use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tempo_core::si::spread;
use tempo_core::walk::{
    earliest_arrival, partial_weighted_degree_mass, temporal_degree_mass, temporal_reachability,
    time_scaled_degree_mass, time_scaled_reachability, walk_census,
};
use tempo_core::{Contact, TemporalNetwork};

fn network() -> impl Strategy<Value = TemporalNetwork> {
    (2usize..9, 1u32..10).prop_flat_map(|(n, t)| {
        prop::collection::vec((0..n, 0..n, 1..=t), 1..40).prop_filter_map("needs a contact", move |raw| {
            let contacts: Vec<Contact> = raw.into_iter().filter_map(|(u, v, t)| Contact::new(u, v, t)).collect();
            (!contacts.is_empty()).then(|| TemporalNetwork::new(n, contacts).unwrap())
        })
    })
}

struct Scores {
    d: f64,
    delta: f64,
    z: f64,
}

fn scores(net: &TemporalNetwork, root: usize, t0: u32, len: u32, m: usize) -> Scores {
    let p = net.extract_partial(root, t0, len, m).unwrap();
    Scores {
        d: partial_weighted_degree_mass(&p).unwrap(),
        delta: temporal_degree_mass(&walk_census::<f64>(&p).unwrap()),
        z: temporal_reachability(&earliest_arrival(&p)) as f64,
    }
}

fn component_size(net: &TemporalNetwork, root: usize) -> usize {
    let agg = net.aggregate(1, net.horizon());
    let mut seen = vec![false; net.n_nodes()];
    let mut stack = vec![root];
    seen[root] = true;
    let mut size = 0;
    while let Some(x) = stack.pop() {
        size += 1;
        for &(y, _) in agg.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    size
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn more_hops_never_lose_walks(net in network(), root in 0usize..8) {
        let root = root % net.n_nodes();
        let t = net.horizon();
        for m in 1..4 {
            let (a, b) = (scores(&net, root, 0, t, m), scores(&net, root, 0, t, m + 1));
            prop_assert!(a.d <= b.d && a.delta <= b.delta && a.z <= b.z);
        }
    }

    #[test]
    fn longer_windows_never_lose_walks(net in network(), root in 0usize..8, m in 1usize..4) {
        let root = root % net.n_nodes();
        for len in 1..net.horizon() {
            let (a, b) = (scores(&net, root, 0, len, m), scores(&net, root, 0, len + 1, m));
            prop_assert!(a.d <= b.d && a.delta <= b.delta && a.z <= b.z);
        }
    }

    #[test]
    fn alpha_one_removes_time_scaling(net in network(), root in 0usize..8, m in 1usize..4) {
        let root = root % net.n_nodes();
        let p = net.extract_partial(root, 0, net.horizon(), m).unwrap();
        let census = walk_census::<f64>(&p).unwrap();
        let ea = earliest_arrival(&p);
        prop_assert_eq!(time_scaled_degree_mass(&census, 1.0), temporal_degree_mass(&census));
        prop_assert_eq!(time_scaled_reachability::<f64>(&ea, 1.0), temporal_reachability(&ea) as f64);
    }

    #[test]
    fn f32_census_matches_f64(net in network(), root in 0usize..8, m in 1usize..4) {
        let root = root % net.n_nodes();
        let p = net.extract_partial(root, 0, net.horizon(), m).unwrap();
        let a = temporal_degree_mass(&walk_census::<f32>(&p).unwrap());
        let b = temporal_degree_mass(&walk_census::<f64>(&p).unwrap());
        prop_assert_eq!(f64::from(a), b);
    }

    #[test]
    fn higher_beta_infects_a_superset(
        net in network(),
        seed in 0usize..8,
        draws in prop::collection::vec(0.0f64..1.0, 40),
        (lo, hi) in (0.01f64..1.0, 0.01f64..1.0).prop_map(|(a, b)| (a.min(b), a.max(b))),
    ) {
        let seed = seed % net.n_nodes();
        let view = net.full_view();
        let a = spread(&view, seed, lo, |i| draws[i]);
        let b = spread(&view, seed, hi, |i| draws[i]);
        for (x, y) in a.iter().zip(&b) {
            if let Some(tx) = x {
                prop_assert!(matches!(y, Some(ty) if ty <= tx));
            }
        }
    }

    #[test]
    fn outbreak_stays_in_component(net in network(), seed in 0usize..8, beta in 0.05f64..1.0, s in any::<u64>()) {
        use rand::Rng;
        let seed = seed % net.n_nodes();
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let infected = spread(&net.full_view(), seed, beta, |_| rng.gen::<f64>());
        let size = infected.iter().flatten().count() - 1;
        prop_assert!(size < component_size(&net, seed));
    }

    #[test]
    fn compaction_is_idempotent(net in network()) {
        let once = net.compact_timesteps().unwrap();
        prop_assert_eq!(once.compact_timesteps().unwrap(), once.clone());
        prop_assert_eq!(once.n_contacts(), net.n_contacts());
    }

    #[test]
    fn full_observation_covers_the_component(net in network(), root in 0usize..8) {
        let root = root % net.n_nodes();
        let p = net.extract_partial(root, 0, net.horizon(), net.n_nodes()).unwrap();
        prop_assert_eq!(p.members().len(), component_size(&net, root));
        prop_assert_eq!(p.local().n_contacts(), p.contacts_global().len());
    }

    #[test]
    fn shuffle_keeps_the_aggregate(net in network(), s in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        if let Ok(shuffled) = net.shuffle_timestamps(&mut rng) {
            prop_assert_eq!(shuffled.aggregate(1, shuffled.horizon()), net.aggregate(1, net.horizon()));
        }
    }
}
