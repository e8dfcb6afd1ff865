//! Discrete-time SI spreading from a single seed and Monte-Carlo influence.

use std::io::{Read, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::network::{NodeId, TemporalNetwork, TemporalView, Timestep};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SiConfig {
    pub beta: f64,
    pub t0: Timestep,
    pub tau: Timestep,
    pub runs: usize,
    pub master_seed: u64,
}

impl SiConfig {
    pub fn new(beta: f64, t0: Timestep, tau: Timestep, runs: usize, master_seed: u64) -> Result<Self> {
        if !(beta > 0.0 && beta <= 1.0) {
            return Err(Error::InvalidParameter(format!("beta {beta} outside (0, 1]")));
        }
        if runs == 0 {
            return Err(Error::InvalidParameter("runs must be at least 1".into()));
        }
        Ok(SiConfig {
            beta,
            t0,
            tau,
            runs,
            master_seed,
        })
    }

    /// Realizations actually performed: a single one when `beta = 1`.
    pub fn effective_runs(&self) -> usize {
        if self.beta >= 1.0 {
            1
        } else {
            self.runs
        }
    }
}

/// Random stream of realization `run` seeded at `node`; independent of
/// scheduling order.
pub fn run_stream(master_seed: u64, node: NodeId, run: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(((node as u64) << 32) ^ run as u64);
    rng
}

/// Runs one SI realization over the view and returns each node's infection
/// time relative to the origin (`Some(0)` for the seed).
///
/// A node infected at step `t` transmits from `t + 1` on. Every contact
/// between an infected and a susceptible node is an independent trial that
/// succeeds when `draw(contact index) < beta`.
pub fn spread(
    view: &TemporalView<'_>,
    seed: NodeId,
    beta: f64,
    mut draw: impl FnMut(usize) -> f64,
) -> Vec<Option<Timestep>> {
    const NEVER: Timestep = Timestep::MAX;
    let mut infected = vec![NEVER; view.n_nodes];
    infected[seed] = 0;
    for (i, c) in view.contacts.iter().enumerate() {
        let t = c.t - view.origin;
        let dst = match (infected[c.u] < t, infected[c.v] < t) {
            (true, false) => c.v,
            (false, true) => c.u,
            _ => continue,
        };
        // already infected earlier in this step by another contact
        if infected[dst] != NEVER {
            continue;
        }
        if beta >= 1.0 || draw(i) < beta {
            infected[dst] = t;
        }
    }
    infected
        .into_iter()
        .map(|t| (t != NEVER).then_some(t))
        .collect()
}

/// Outbreak size (seed excluded) of one realization.
pub fn simulate_si<R: Rng + ?Sized>(
    net: &TemporalNetwork,
    seed_node: NodeId,
    cfg: &SiConfig,
    rng: &mut R,
) -> Result<usize> {
    if seed_node >= net.n_nodes() {
        return Err(Error::NodeOutOfRange {
            node: seed_node,
            n_nodes: net.n_nodes(),
        });
    }
    let view = net.view(cfg.t0, cfg.tau);
    let infected = spread(&view, seed_node, cfg.beta, |_| rng.gen::<f64>());
    Ok(infected.iter().filter(|t| t.is_some()).count() - 1)
}

/// Mean and sample standard deviation of every node's outbreak size.
#[derive(Clone, Debug, PartialEq)]
pub struct InfluenceVector {
    pub mean: Vec<f64>,
    pub std: Vec<f64>,
    pub runs: usize,
    pub beta: f64,
    pub t0: Timestep,
    pub tau: Timestep,
}

impl InfluenceVector {
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["node", "mean", "std", "runs", "beta", "t0", "tau"])?;
        for (node, (m, s)) in self.mean.iter().zip(&self.std).enumerate() {
            w.write_record([
                node.to_string(),
                m.to_string(),
                s.to_string(),
                self.runs.to_string(),
                self.beta.to_string(),
                self.t0.to_string(),
                self.tau.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn read_csv<R: Read>(input: R) -> Result<Self> {
        let mut rd = csv::Reader::from_reader(input);
        let mut rows: Vec<(usize, f64, f64, usize, f64, Timestep, Timestep)> = Vec::new();
        for rec in rd.deserialize() {
            rows.push(rec?);
        }
        rows.sort_by_key(|r| r.0);
        if rows.iter().enumerate().any(|(i, r)| r.0 != i) {
            return Err(Error::Config("influence CSV must list nodes 0..N once each".into()));
        }
        let first = rows.first().copied().unwrap_or((0, 0.0, 0.0, 0, 1.0, 0, 0));
        Ok(InfluenceVector {
            mean: rows.iter().map(|r| r.1).collect(),
            std: rows.iter().map(|r| r.2).collect(),
            runs: first.3,
            beta: first.4,
            t0: first.5,
            tau: first.6,
        })
    }
}

/// Influence of every node as seed, averaged over `cfg.effective_runs()`
/// realizations. Realization `r` of seed `i` draws from
/// [`run_stream`]`(master_seed, i, r)`, so the result does not depend on
/// thread scheduling.
pub fn influence_all(net: &TemporalNetwork, cfg: &SiConfig) -> Result<InfluenceVector> {
    if u64::from(cfg.t0) + u64::from(cfg.tau) > u64::from(net.horizon()) {
        return Err(Error::InvalidWindow(format!(
            "spreading window ({}, {}] exceeds horizon {}",
            cfg.t0,
            u64::from(cfg.t0) + u64::from(cfg.tau),
            net.horizon()
        )));
    }
    let view = net.view(cfg.t0, cfg.tau);
    let runs = cfg.effective_runs();
    let stats: Vec<(f64, f64)> = (0..net.n_nodes())
        .into_par_iter()
        .map(|seed| {
            let sizes: Vec<f64> = (0..runs)
                .map(|r| {
                    let mut rng = run_stream(cfg.master_seed, seed, r);
                    let inf = spread(&view, seed, cfg.beta, |_| rng.gen::<f64>());
                    (inf.iter().filter(|t| t.is_some()).count() - 1) as f64
                })
                .collect();
            mean_std(&sizes)
        })
        .collect();
    Ok(InfluenceVector {
        mean: stats.iter().map(|s| s.0).collect(),
        std: stats.iter().map(|s| s.1).collect(),
        runs,
        beta: cfg.beta,
        t0: cfg.t0,
        tau: cfg.tau,
    })
}

fn mean_std(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}
