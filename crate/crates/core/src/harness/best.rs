use std::collections::HashMap;
use std::io::Write;

use super::rows::{fmt_q, ResultRow};
use crate::error::Result;
use crate::metric::{Metric, Mode};

/// Qualities of one parameter combination averaged over spreading starts.
#[derive(Clone, Debug, PartialEq)]
pub struct StartMean {
    pub metric: Metric,
    pub mode: Mode,
    pub beta: f64,
    pub phi: Option<f64>,
    pub m: Option<usize>,
    pub alpha: Option<f64>,
    /// NaN when no start has a defined correlation.
    pub qk: f64,
    pub qr: f64,
    /// Starts with a defined correlation; the others are left out of both
    /// means.
    pub starts: usize,
    pub excluded: usize,
}

type ComboKey = (Metric, Mode, u64, Option<u64>, Option<usize>, Option<u64>);

fn combo_key(r: &ResultRow) -> ComboKey {
    (
        r.metric,
        r.mode,
        r.beta.to_bits(),
        r.phi.map(f64::to_bits),
        r.m,
        r.alpha.map(f64::to_bits),
    )
}

/// Averages every combination over its starts, in first-seen order.
pub fn start_means(rows: &[ResultRow]) -> Vec<StartMean> {
    let mut order: Vec<ComboKey> = Vec::new();
    let mut groups: HashMap<ComboKey, Vec<&ResultRow>> = HashMap::new();
    for r in rows {
        let k = combo_key(r);
        groups
            .entry(k)
            .or_insert_with(|| {
                order.push(k);
                Vec::new()
            })
            .push(r);
    }
    order
        .iter()
        .map(|k| {
            let g = &groups[k];
            let defined: Vec<&&ResultRow> = g.iter().filter(|r| r.qk.is_some()).collect();
            let (qk, qr) = if defined.is_empty() {
                (f64::NAN, g.iter().map(|r| r.qr).sum::<f64>() / g.len() as f64)
            } else {
                let n = defined.len() as f64;
                (
                    defined.iter().map(|r| r.qk.unwrap()).sum::<f64>() / n,
                    defined.iter().map(|r| r.qr).sum::<f64>() / n,
                )
            };
            let r = g[0];
            StartMean {
                metric: r.metric,
                mode: r.mode,
                beta: r.beta,
                phi: r.phi,
                m: r.m,
                alpha: r.alpha,
                qk,
                qr,
                starts: defined.len(),
                excluded: g.len() - defined.len(),
            }
        })
        .collect()
}

/// Best start-averaged quality of one (metric, mode, φ, β) group, with the
/// `(m, α)` attaining it, for each quality measure separately.
#[derive(Clone, Debug, PartialEq)]
pub struct BestQuality {
    pub metric: Metric,
    pub mode: Mode,
    pub phi: Option<f64>,
    pub beta: f64,
    pub qk_max: f64,
    pub m_k: Option<usize>,
    pub alpha_k: Option<f64>,
    pub qr_max: f64,
    pub m_r: Option<usize>,
    pub alpha_r: Option<f64>,
}

/// True when `a` should replace the incumbent `b` on equal quality:
/// smaller `m` first, then larger `α`.
fn preferred_on_tie(a: &StartMean, b: &StartMean) -> bool {
    match a.m.cmp(&b.m) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => a.alpha.unwrap_or(1.0) > b.alpha.unwrap_or(1.0),
    }
}

fn argmax<'a>(g: &[&'a StartMean], q: impl Fn(&StartMean) -> f64) -> Option<&'a StartMean> {
    let mut best: Option<&StartMean> = None;
    for &c in g {
        if q(c).is_nan() {
            continue;
        }
        best = match best {
            None => Some(c),
            Some(b) if q(c) > q(b) || (q(c) == q(b) && preferred_on_tie(c, b)) => Some(c),
            keep => keep,
        };
    }
    best
}

/// Maximizes the start-averaged qualities over `(m, α)` within each
/// (metric, mode, φ, β) group. Groups without any defined quality are
/// dropped.
pub fn best_quality(rows: &[ResultRow]) -> Vec<BestQuality> {
    let means = start_means(rows);
    type GroupKey = (Metric, Mode, Option<u64>, u64);
    let mut order: Vec<GroupKey> = Vec::new();
    let mut groups: HashMap<GroupKey, Vec<&StartMean>> = HashMap::new();
    for s in &means {
        let k = (s.metric, s.mode, s.phi.map(f64::to_bits), s.beta.to_bits());
        groups
            .entry(k)
            .or_insert_with(|| {
                order.push(k);
                Vec::new()
            })
            .push(s);
    }
    order
        .iter()
        .filter_map(|k| {
            let g = &groups[k];
            let bk = argmax(g, |s| s.qk);
            let br = argmax(g, |s| s.qr);
            if bk.is_none() && br.is_none() {
                return None;
            }
            let s = g[0];
            Some(BestQuality {
                metric: s.metric,
                mode: s.mode,
                phi: s.phi,
                beta: s.beta,
                qk_max: bk.map_or(f64::NAN, |b| b.qk),
                m_k: bk.and_then(|b| b.m),
                alpha_k: bk.and_then(|b| b.alpha),
                qr_max: br.map_or(f64::NAN, |b| b.qr),
                m_r: br.and_then(|b| b.m),
                alpha_r: br.and_then(|b| b.alpha),
            })
        })
        .collect()
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(String::new, |x| x.to_string())
}

pub fn write_best<W: Write>(out: W, best: &[BestQuality]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "metric", "mode", "phi", "beta", "Qk_max", "m_k", "alpha_k", "Qr_max", "m_r", "alpha_r",
    ])?;
    for b in best {
        w.write_record([
            b.metric.to_string(),
            b.mode.to_string(),
            opt(b.phi),
            b.beta.to_string(),
            fmt_q((!b.qk_max.is_nan()).then_some(b.qk_max)),
            opt(b.m_k),
            opt(b.alpha_k),
            fmt_q((!b.qr_max.is_nan()).then_some(b.qr_max)),
            opt(b.m_r),
            opt(b.alpha_r),
        ])?;
    }
    w.flush()?;
    Ok(())
}
