use std::fs::{File, OpenOptions};
use std::io::{BufWriter, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::cache::{network_digest, InfluenceCache};
use super::config::{SweepConfig, Window};
use super::rows::{write_rows, ResultRow};
use crate::derive::{full_aggregated, partial_classic, walk_profiles};
use crate::classic::{snapshot_average, temporal_closeness_all};
use crate::error::{Error, Result};
use crate::eval::{evaluate, recognition_rate};
use crate::metric::{Metric, Mode};
use crate::network::{parse_contact_list, EdgeListFormat};
use crate::network::TemporalNetwork;
use crate::si::{InfluenceVector, SiConfig};

/// Predictor scores of one (metric, mode, φ, m, α) combination.
#[derive(Clone, Debug, PartialEq)]
pub struct Predictor {
    pub metric: Metric,
    pub mode: Mode,
    pub phi: Option<f64>,
    pub m: Option<usize>,
    pub alpha: Option<f64>,
    pub values: Vec<f64>,
}

/// Loads `cfg.dataset`, restricted to its largest component when `cfg.lcc`.
pub fn load_network(cfg: &SweepConfig) -> Result<TemporalNetwork> {
    let path = cfg
        .dataset
        .as_ref()
        .ok_or_else(|| Error::Config("no dataset given".into()))?;
    let (net, report) = parse_contact_list(path, &EdgeListFormat::from_cols(&cfg.cols)?)?;
    log::info!(
        "loaded {}: {} nodes, {} contacts, T = {} ({:?})",
        path.display(),
        net.n_nodes(),
        net.n_contacts(),
        net.horizon(),
        report
    );
    if cfg.lcc {
        net.largest_connected_component()
    } else {
        Ok(net)
    }
}

fn active_modes(cfg: &SweepConfig, metric: Metric) -> Vec<Mode> {
    cfg.modes
        .iter()
        .copied()
        .filter(|m| metric.modes().contains(m))
        .collect()
}

/// Every predictor of the grid for one window, in output order
/// (metric, mode, φ, m, α).
pub fn predictors(net: &TemporalNetwork, cfg: &SweepConfig, w: Window) -> Result<Vec<Predictor>> {
    let mut partial_grid = Vec::new();
    for &phi in &cfg.phis {
        let len = SweepConfig::phi_len(phi, w.tau);
        if len == 0 {
            log::warn!("t0 = {}: phi = {phi} gives an empty observation window, skipped", w.t0);
            continue;
        }
        partial_grid.push((phi, len));
    }
    let wants_profiles = cfg
        .metrics
        .iter()
        .any(|m| m.as_static().is_none() && active_modes(cfg, *m).contains(&Mode::Partial));
    let mut profiles = Vec::new();
    if wants_profiles {
        for &(_, len) in &partial_grid {
            for &m in &cfg.hops {
                profiles.push(walk_profiles::<f64>(net, w.t0, len, m)?);
            }
        }
    }

    let mut out = Vec::new();
    for &metric in &cfg.metrics {
        for mode in active_modes(cfg, metric) {
            let mut push = |phi, m, alpha, values| {
                out.push(Predictor {
                    metric,
                    mode,
                    phi,
                    m,
                    alpha,
                    values,
                })
            };
            match mode {
                Mode::FullAggregated => {
                    let s = metric.as_static().expect("classic metric");
                    push(None, None, None, full_aggregated(s, net, w.t0, w.tau)?);
                }
                Mode::FullTemporal => {
                    let view = net.view(w.t0, w.tau);
                    let v = match metric.as_static() {
                        Some(s) => snapshot_average(s, &view)?,
                        None => temporal_closeness_all(&view),
                    };
                    push(None, None, None, v);
                }
                Mode::Partial => {
                    for (i, &(phi, _)) in partial_grid.iter().enumerate() {
                        for (j, &m) in cfg.hops.iter().enumerate() {
                            let prof = &profiles[i * cfg.hops.len() + j];
                            if metric.uses_alpha() {
                                for &a in &cfg.alphas {
                                    let v = prof.iter().map(|p| p.score(metric, a)).collect();
                                    push(Some(phi), Some(m), Some(a), v);
                                }
                            } else {
                                let v = prof.iter().map(|p| p.score(metric, 1.0)).collect();
                                push(Some(phi), Some(m), None, v);
                            }
                        }
                    }
                }
                Mode::PartialAggregated | Mode::PartialTemporal => {
                    for &(phi, len) in &partial_grid {
                        for &m in &cfg.hops {
                            let v = partial_classic(metric, mode, net, w.t0, len, m)?;
                            push(Some(phi), Some(m), None, v);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Scores one predictor against the measured influence. An undefined
/// Kendall correlation is reported as `None`.
pub fn score(pred: &Predictor, influence: &InfluenceVector, f_percent: f64) -> Result<(Option<f64>, f64)> {
    match evaluate(&pred.values, &influence.mean, f_percent) {
        Ok(e) => Ok((Some(e.q_kendall), e.q_recognition)),
        Err(Error::UndefinedCorrelation(_)) => Ok((
            None,
            recognition_rate(&pred.values, &influence.mean, f_percent)?,
        )),
        Err(e) => Err(e),
    }
}

/// Result rows of one window, ordered β, then predictor order.
pub fn sweep_window(
    net: &TemporalNetwork,
    net_digest: &str,
    cfg: &SweepConfig,
    cache: &InfluenceCache,
    w: Window,
) -> Result<Vec<ResultRow>> {
    let mut influences = Vec::with_capacity(cfg.betas.len());
    for &beta in &cfg.betas {
        let si = SiConfig::new(beta, w.t0, w.tau, cfg.runs, cfg.master_seed)?;
        influences.push(cache.get_or_compute(net, net_digest, &si)?);
    }
    let preds = predictors(net, cfg, w)?;
    let mut rows = Vec::with_capacity(influences.len() * preds.len());
    for (&beta, inf) in cfg.betas.iter().zip(&influences) {
        for p in &preds {
            let (qk, qr) = score(p, inf, cfg.f_percent)?;
            rows.push(ResultRow {
                metric: p.metric,
                mode: p.mode,
                beta,
                t0: w.t0,
                phi: p.phi,
                m: p.m,
                alpha: p.alpha,
                qk,
                qr,
                runs: inf.runs,
                seed: cfg.master_seed,
            });
        }
    }
    Ok(rows)
}

fn feasible_windows(net: &TemporalNetwork, cfg: &SweepConfig) -> Vec<Window> {
    let (windows, skipped) = cfg.windows(net.horizon());
    for f in skipped {
        log::warn!(
            "t0 fraction {f} with tau fraction {} does not fit in T = {}, skipped",
            cfg.tau_fraction,
            net.horizon()
        );
    }
    windows
}

/// Whole sweep held in memory.
pub fn sweep_rows(net: &TemporalNetwork, cfg: &SweepConfig) -> Result<Vec<ResultRow>> {
    cfg.validate()?;
    let cache = InfluenceCache::new(cfg.cache_dir.clone());
    let digest = network_digest(net);
    let mut rows = Vec::new();
    for w in feasible_windows(net, cfg) {
        rows.extend(sweep_window(net, &digest, cfg, &cache, w)?);
    }
    Ok(rows)
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
struct Checkpoint {
    digest: String,
    windows_done: usize,
    bytes: u64,
}

/// Identifies a sweep: the network content plus every grid setting that
/// changes the rows.
fn sweep_digest(net_digest: &str, cfg: &SweepConfig) -> Result<String> {
    let mut key = cfg.clone();
    key.dataset = None;
    key.cache_dir = None;
    key.replicas = 1;
    let mut h = Sha256::new();
    h.update(net_digest.as_bytes());
    h.update(serde_json::to_vec(&key)?);
    Ok(hex::encode(h.finalize()))
}

pub fn checkpoint_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".ckpt.json");
    PathBuf::from(s)
}

fn read_checkpoint(path: &Path) -> Option<Checkpoint> {
    let text = std::fs::read_to_string(path).ok()?;
    serde_json::from_str(&text).ok()
}

fn write_checkpoint(path: &Path, ckpt: &Checkpoint) -> Result<()> {
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, serde_json::to_vec(ckpt)?)?;
    std::fs::rename(tmp, path)?;
    Ok(())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub windows: usize,
    pub windows_resumed: usize,
    pub rows_written: usize,
}

/// Runs the sweep into a results CSV, checkpointing after every window.
/// With `resume`, a matching checkpoint next to `out` skips the windows it
/// records; anything written after it is discarded.
pub fn run_sweep(net: &TemporalNetwork, cfg: &SweepConfig, out: &Path, resume: bool) -> Result<SweepSummary> {
    cfg.validate()?;
    let cache = InfluenceCache::new(cfg.cache_dir.clone());
    let net_digest = network_digest(net);
    let digest = sweep_digest(&net_digest, cfg)?;
    let windows = feasible_windows(net, cfg);
    let ckpt_path = checkpoint_path(out);

    let prior = if resume {
        read_checkpoint(&ckpt_path).filter(|c| c.digest == digest && c.windows_done <= windows.len())
    } else {
        None
    };
    let (file, start) = match prior {
        Some(c) => {
            let mut f = OpenOptions::new().write(true).open(out)?;
            f.set_len(c.bytes)?;
            f.seek(SeekFrom::End(0))?;
            log::info!("resuming {} after {} windows", out.display(), c.windows_done);
            (f, c.windows_done)
        }
        None => {
            let mut f = File::create(out)?;
            write_rows(&mut f, &[], true)?;
            (f, 0)
        }
    };
    let mut w = BufWriter::new(file);
    let mut summary = SweepSummary {
        windows: windows.len(),
        windows_resumed: start,
        rows_written: 0,
    };
    for (i, &win) in windows.iter().enumerate().skip(start) {
        log::info!("window {}/{}: t0 = {}, tau = {}", i + 1, windows.len(), win.t0, win.tau);
        let rows = sweep_window(net, &net_digest, cfg, &cache, win)?;
        write_rows(&mut w, &rows, false)?;
        w.flush()?;
        w.get_ref().sync_data()?;
        summary.rows_written += rows.len();
        let bytes = w.get_ref().metadata()?.len();
        write_checkpoint(
            &ckpt_path,
            &Checkpoint {
                digest: digest.clone(),
                windows_done: i + 1,
                bytes,
            },
        )?;
    }
    drop(w);
    if ckpt_path.exists() {
        std::fs::remove_file(&ckpt_path)?;
    }
    Ok(summary)
}
