use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metric::{Metric, Mode};
use crate::network::Timestep;

/// Experiment grid. Every field has a default, so a JSON config only needs
/// the fields it changes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepConfig {
    pub dataset: Option<PathBuf>,
    /// Column positions of `u,v,t` in the dataset.
    pub cols: String,
    /// Restrict the dataset to its largest connected component on load.
    pub lcc: bool,
    pub betas: Vec<f64>,
    /// Spreading starts as fractions of `T`, floored to timesteps.
    pub t0_fractions: Vec<f64>,
    pub tau_fraction: f64,
    pub phis: Vec<f64>,
    pub hops: Vec<usize>,
    pub alphas: Vec<f64>,
    pub runs: usize,
    pub master_seed: u64,
    pub f_percent: f64,
    pub metrics: Vec<Metric>,
    pub modes: Vec<Mode>,
    pub replicas: usize,
    pub cache_dir: Option<PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            dataset: None,
            cols: "0,1,2".into(),
            lcc: false,
            betas: vec![0.01, 0.05, 0.1, 0.25, 0.5, 1.0],
            t0_fractions: vec![0.0, 0.125, 0.25, 0.375, 0.5, 0.625, 0.75],
            tau_fraction: 0.25,
            phis: vec![0.25, 0.5],
            hops: vec![1, 2, 3],
            alphas: vec![0.2, 0.4, 0.6, 0.8, 0.85, 0.9, 0.95, 0.99, 0.999, 0.9999, 1.0],
            runs: 500,
            master_seed: 0,
            f_percent: 20.0,
            metrics: Metric::ALL.to_vec(),
            modes: Mode::ALL.to_vec(),
            replicas: 10,
            cache_dir: None,
        }
    }
}

/// One observation window of the sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub t0: Timestep,
    pub tau: Timestep,
}

pub(crate) fn floor_steps(fraction: f64, of: Timestep) -> Timestep {
    (fraction * f64::from(of) + 1e-9).floor() as Timestep
}

impl SweepConfig {
    pub fn from_json_file(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Ok(serde_json::from_str(&text)?)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::Config(what.to_string()));
        if self.betas.is_empty() || self.t0_fractions.is_empty() || self.metrics.is_empty() {
            return bad("beta, t0 and metric grids must be nonempty");
        }
        if self.betas.iter().any(|&b| !(b > 0.0 && b <= 1.0)) {
            return bad("every beta must lie in (0, 1]");
        }
        if self.alphas.iter().any(|&a| !(a > 0.0 && a <= 1.0)) {
            return bad("every alpha must lie in (0, 1]");
        }
        if self.phis.iter().any(|&p| !(p > 0.0 && p <= 1.0)) {
            return bad("every phi must lie in (0, 1]");
        }
        if self.hops.contains(&0) {
            return bad("hop limits start at 1");
        }
        if self.t0_fractions.iter().any(|&f| !(0.0..1.0).contains(&f)) {
            return bad("t0 fractions must lie in [0, 1)");
        }
        if !(self.tau_fraction > 0.0 && self.tau_fraction <= 1.0) {
            return bad("tau fraction must lie in (0, 1]");
        }
        if self.runs == 0 || self.replicas == 0 {
            return bad("runs and replicas must be at least 1");
        }
        if !(self.f_percent > 0.0 && self.f_percent <= 100.0) {
            return bad("f_percent must lie in (0, 100]");
        }
        let needs_partial = self
            .metrics
            .iter()
            .any(|m| m.modes().iter().any(|md| md.is_partial() && self.modes.contains(md)));
        if needs_partial && (self.phis.is_empty() || self.hops.is_empty()) {
            return bad("partial modes need nonempty phi and hop grids");
        }
        if self.metrics.iter().any(|m| m.uses_alpha()) && self.alphas.is_empty() {
            return bad("time-scaled metrics need a nonempty alpha grid");
        }
        Ok(())
    }

    /// Windows `(t0, t0 + tau]` for a horizon `T`, in grid order, with
    /// infeasible entries reported separately.
    pub fn windows(&self, horizon: Timestep) -> (Vec<Window>, Vec<f64>) {
        let tau = floor_steps(self.tau_fraction, horizon);
        let mut ok = Vec::new();
        let mut skipped = Vec::new();
        for &f in &self.t0_fractions {
            let t0 = floor_steps(f, horizon);
            if tau == 0 || u64::from(t0) + u64::from(tau) > u64::from(horizon) {
                skipped.push(f);
            } else {
                ok.push(Window { t0, tau });
            }
        }
        (ok, skipped)
    }

    pub fn phi_len(phi: f64, tau: Timestep) -> Timestep {
        floor_steps(phi, tau)
    }
}
