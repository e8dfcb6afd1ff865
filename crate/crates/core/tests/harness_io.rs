use std::fs;

use tempo_core::harness::best::{best_quality, write_best};
use tempo_core::harness::randomize::{randomization_study, write_replica_rows};
use tempo_core::harness::{dataset_report, load_network, read_rows, run_sweep, sweep_rows, SweepConfig};
use tempo_core::{Metric, Mode};

const E2_SHUFFLED_COLS: &str = "# t u v\n1 a b\n2 a b\n3 b c\n3 b c\n";

#[test]
fn e2_desk_run_ranks_perfectly_at_beta_one() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("e2.txt");
    fs::write(&data, E2_SHUFFLED_COLS).unwrap();
    let cfg = SweepConfig {
        dataset: Some(data),
        cols: "1,2,0".into(),
        betas: vec![1.0],
        t0_fractions: vec![0.0],
        tau_fraction: 1.0,
        phis: vec![1.0],
        hops: vec![3],
        alphas: vec![1.0],
        metrics: vec![Metric::TemporalReachability],
        modes: vec![Mode::Partial],
        ..SweepConfig::default()
    };
    let net = load_network(&cfg).unwrap();
    assert_eq!((net.n_nodes(), net.n_contacts(), net.horizon()), (3, 3, 3));
    let rows = sweep_rows(&net, &cfg).unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0].qk, Some(1.0));
    assert_eq!(rows[0].runs, 1);
}

#[test]
fn sweep_file_round_trips_through_best() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("net.txt");
    fs::write(
        &data,
        "0 1 1\n1 2 2\n2 3 3\n0 3 4\n1 3 5\n3 4 6\n0 4 7\n2 4 8\n1 4 8\n0 2 8\n",
    )
    .unwrap();
    let cfg = SweepConfig {
        dataset: Some(data),
        betas: vec![0.2, 1.0],
        t0_fractions: vec![0.0, 0.5],
        tau_fraction: 0.5,
        alphas: vec![0.5, 1.0],
        runs: 30,
        cache_dir: Some(dir.path().join("cache")),
        ..SweepConfig::default()
    };
    let net = load_network(&cfg).unwrap();
    let out = dir.path().join("results.csv");
    let s = run_sweep(&net, &cfg, &out, false).unwrap();
    let rows = read_rows(fs::File::open(&out).unwrap()).unwrap();
    assert_eq!(rows.len(), s.rows_written);
    assert_eq!(rows, sweep_rows(&net, &cfg).unwrap());
    // cache entries: one per (t0, beta)
    assert_eq!(fs::read_dir(dir.path().join("cache")).unwrap().count(), 4);

    let best = best_quality(&rows);
    let z = best
        .iter()
        .find(|b| b.metric == Metric::TemporalReachability && b.phi == Some(0.25) && b.beta == 1.0)
        .unwrap();
    assert!(z.m_k.is_some() && z.alpha_k.is_some());
    let full = best.iter().filter(|b| b.mode == Mode::FullAggregated).count();
    assert_eq!(full, 4 * 2);
    let mut buf = Vec::new();
    write_best(&mut buf, &best).unwrap();
    assert_eq!(String::from_utf8(buf).unwrap().lines().count(), best.len() + 1);
}

#[test]
fn stats_and_replicas_on_a_file_dataset() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("star.txt");
    fs::write(&data, "0 1 1\n0 2 1\n0 3 1\n0 4 1\n0 1 2\n").unwrap();
    let cfg = SweepConfig {
        dataset: Some(data),
        betas: vec![1.0],
        t0_fractions: vec![0.0],
        tau_fraction: 1.0,
        phis: vec![1.0],
        hops: vec![1],
        alphas: vec![1.0],
        metrics: vec![Metric::DegreeMass],
        replicas: 3,
        runs: 5,
        ..SweepConfig::default()
    };
    let net = load_network(&cfg).unwrap();
    let stats = dataset_report(&net, &cfg, true).unwrap();
    assert_eq!((stats.n_nodes, stats.n_contacts, stats.horizon), (5, 5, 2));
    assert!((stats.link_density - 0.4).abs() < 1e-15);

    let study = randomization_study(&net, &cfg).unwrap();
    assert_eq!(study.len(), 1);
    let mut buf = Vec::new();
    write_replica_rows(&mut buf, &study).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert!(text.starts_with("metric,mode,beta,t0,phi,m,alpha,Qk_mean,Qk_std,Qr_mean,Qr_std,replicas,runs,seed\n"));
}
