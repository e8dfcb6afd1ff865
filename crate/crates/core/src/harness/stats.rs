use std::io::Write;

use rayon::prelude::*;

use super::cache::{network_digest, InfluenceCache};
use super::config::SweepConfig;
use crate::classic::temporal_hopcounts;
use crate::error::Result;
use crate::network::TemporalNetwork;
use crate::si::SiConfig;

#[derive(Clone, Debug, PartialEq)]
pub struct DatasetStats {
    pub n_nodes: usize,
    pub n_contacts: usize,
    pub horizon: u32,
    /// `2 |E| / (N (N - 1))` of the full aggregate.
    pub link_density: f64,
    /// Share of active nodes with exactly one neighbor, averaged over the
    /// snapshots that carry contacts.
    pub degree_one_proportion: f64,
    /// Share of ordered pairs whose minimum temporal hop count is 1 or
    /// infinite, averaged over the sweep windows.
    pub hop_one_or_unreachable: f64,
    /// `(β, influence averaged over nodes and windows)`.
    pub mean_influence: Vec<(f64, f64)>,
}

fn degree_one_proportion(net: &TemporalNetwork) -> f64 {
    let mut deg = vec![0usize; net.n_nodes()];
    let mut sum = 0.0;
    let mut snapshots = 0usize;
    for (_, contacts) in net.full_view().snapshots() {
        if contacts.is_empty() {
            continue;
        }
        for c in contacts {
            deg[c.u] += 1;
            deg[c.v] += 1;
        }
        let (mut active, mut ones) = (0usize, 0usize);
        for c in contacts {
            for x in [c.u, c.v] {
                if deg[x] > 0 {
                    active += 1;
                    ones += usize::from(deg[x] == 1);
                    deg[x] = 0;
                }
            }
        }
        sum += ones as f64 / active as f64;
        snapshots += 1;
    }
    if snapshots == 0 {
        0.0
    } else {
        sum / snapshots as f64
    }
}

fn hop_one_or_unreachable(net: &TemporalNetwork, cfg: &SweepConfig) -> f64 {
    let n = net.n_nodes();
    let (windows, _) = cfg.windows(net.horizon());
    if n < 2 || windows.is_empty() {
        return f64::NAN;
    }
    let pairs = (n * (n - 1)) as f64;
    let total: f64 = windows
        .iter()
        .map(|w| {
            let view = net.view(w.t0, w.tau);
            let hits: usize = (0..n)
                .into_par_iter()
                .map(|root| {
                    temporal_hopcounts(&view, root)
                        .iter()
                        .enumerate()
                        .filter(|&(j, h)| j != root && matches!(h, None | Some(1)))
                        .count()
                })
                .sum();
            hits as f64 / pairs
        })
        .sum();
    total / windows.len() as f64
}

/// Descriptive statistics of a dataset under the sweep's window grid.
/// Influence is simulated only when `with_influence` is set.
pub fn dataset_report(net: &TemporalNetwork, cfg: &SweepConfig, with_influence: bool) -> Result<DatasetStats> {
    let n = net.n_nodes();
    let edges = net.aggregate(1, net.horizon()).n_edges();
    let link_density = if n < 2 {
        0.0
    } else {
        2.0 * edges as f64 / (n * (n - 1)) as f64
    };
    let mut mean_influence = Vec::new();
    if with_influence {
        let cache = InfluenceCache::new(cfg.cache_dir.clone());
        let digest = network_digest(net);
        let (windows, _) = cfg.windows(net.horizon());
        for &beta in &cfg.betas {
            let mut acc = 0.0;
            for w in &windows {
                let si = SiConfig::new(beta, w.t0, w.tau, cfg.runs, cfg.master_seed)?;
                let inf = cache.get_or_compute(net, &digest, &si)?;
                acc += inf.mean.iter().sum::<f64>() / n as f64;
            }
            mean_influence.push((beta, acc / windows.len().max(1) as f64));
        }
    }
    Ok(DatasetStats {
        n_nodes: n,
        n_contacts: net.n_contacts(),
        horizon: net.horizon(),
        link_density,
        degree_one_proportion: degree_one_proportion(net),
        hop_one_or_unreachable: hop_one_or_unreachable(net, cfg),
        mean_influence,
    })
}

impl DatasetStats {
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["statistic", "value"])?;
        let mut put = |k: &str, v: String| w.write_record([k, v.as_str()]);
        put("N", self.n_nodes.to_string())?;
        put("L", self.n_contacts.to_string())?;
        put("T", self.horizon.to_string())?;
        put("p", self.link_density.to_string())?;
        put("degree1_proportion", self.degree_one_proportion.to_string())?;
        put("pr_th_1_or_inf", self.hop_one_or_unreachable.to_string())?;
        for (beta, m) in &self.mean_influence {
            put(&format!("mean_influence_beta_{beta}"), m.to_string())?;
        }
        w.flush()?;
        Ok(())
    }
}
