use std::io::Write;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::config::SweepConfig;
use super::rows::{fmt_q, ResultRow};
use super::sweep::sweep_rows;
use crate::error::{Error, Result};
use crate::network::TemporalNetwork;

/// Timestamp-shuffled copy number `replica`, seeded from `master_seed` on a
/// stream disjoint from the SI streams.
pub fn replica_network(net: &TemporalNetwork, master_seed: u64, replica: usize) -> Result<TemporalNetwork> {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(u64::MAX - replica as u64);
    net.shuffle_timestamps(&mut rng)
}

/// One combination's qualities across replicas.
#[derive(Clone, Debug, PartialEq)]
pub struct ReplicaRow {
    /// Grid coordinates, with `qk`/`qr` holding the replica means.
    pub row: ResultRow,
    pub qk_std: f64,
    pub qr_std: f64,
    /// Replicas whose correlation was defined (the Kendall statistics use
    /// only these).
    pub replicas: usize,
}

fn mean_std(xs: &[f64]) -> (f64, f64) {
    if xs.is_empty() {
        return (f64::NAN, f64::NAN);
    }
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() == 1 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

/// Runs the sweep on `cfg.replicas` shuffled replicas and reports, per
/// combination, the mean and sample standard deviation across replicas.
pub fn randomization_study(net: &TemporalNetwork, cfg: &SweepConfig) -> Result<Vec<ReplicaRow>> {
    cfg.validate()?;
    let mut per_replica: Vec<Vec<ResultRow>> = Vec::with_capacity(cfg.replicas);
    for r in 0..cfg.replicas {
        log::info!("replica {}/{}", r + 1, cfg.replicas);
        let shuffled = replica_network(net, cfg.master_seed, r)?;
        per_replica.push(sweep_rows(&shuffled, cfg)?);
    }
    let first = &per_replica[0];
    if let Some(bad) = per_replica.iter().find(|rows| rows.len() != first.len()) {
        return Err(Error::LengthMismatch {
            left: first.len(),
            right: bad.len(),
        });
    }
    Ok((0..first.len())
        .map(|i| {
            let qk: Vec<f64> = per_replica.iter().filter_map(|rows| rows[i].qk).collect();
            let qr: Vec<f64> = per_replica.iter().map(|rows| rows[i].qr).collect();
            let (qk_mean, qk_std) = mean_std(&qk);
            let (qr_mean, qr_std) = mean_std(&qr);
            ReplicaRow {
                row: ResultRow {
                    qk: (!qk_mean.is_nan()).then_some(qk_mean),
                    qr: qr_mean,
                    ..first[i].clone()
                },
                qk_std,
                qr_std,
                replicas: qk.len(),
            }
        })
        .collect())
}

pub const REPLICA_HEADER: [&str; 14] = [
    "metric", "mode", "beta", "t0", "phi", "m", "alpha", "Qk_mean", "Qk_std", "Qr_mean", "Qr_std",
    "replicas", "runs", "seed",
];

pub fn write_replica_rows<W: Write>(out: W, rows: &[ReplicaRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(REPLICA_HEADER)?;
    for r in rows {
        let base = r.row.record();
        let std = |s: f64| fmt_q((!s.is_nan()).then_some(s));
        w.write_record(
            base[..8]
                .iter()
                .cloned()
                .chain([std(r.qk_std), base[8].clone(), std(r.qr_std), r.replicas.to_string()])
                .chain(base[9..].iter().cloned()),
        )?;
    }
    w.flush()?;
    Ok(())
}
