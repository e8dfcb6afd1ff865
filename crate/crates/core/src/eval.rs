//! Ranking quality of a predictor against ground-truth influence.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Pair counts behind Kendall's tau-b.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PairCounts {
    pub concordant: u64,
    pub discordant: u64,
    /// Tied in the actual values only.
    pub ties_actual: u64,
    /// Tied in the predicted values only.
    pub ties_predicted: u64,
}

impl PairCounts {
    /// `(n_c - n_d) / sqrt((n_c + n_d + O)(n_c + n_d + U))`.
    pub fn tau_b(&self) -> Result<f64> {
        let nc = self.concordant as f64;
        let nd = self.discordant as f64;
        let denom = ((nc + nd + self.ties_actual as f64) * (nc + nd + self.ties_predicted as f64)).sqrt();
        if denom == 0.0 {
            return Err(Error::UndefinedCorrelation(
                "one of the rankings is constant".into(),
            ));
        }
        Ok((nc - nd) / denom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RankingEvaluation {
    pub q_kendall: f64,
    pub q_recognition: f64,
    pub f_percent: f64,
    pub pairs: PairCounts,
}

/// Both quality measures at once.
pub fn evaluate<S: Scalar>(predicted: &[S], actual: &[S], f_percent: f64) -> Result<RankingEvaluation> {
    let pairs = kendall_pairs(predicted, actual)?;
    Ok(RankingEvaluation {
        q_kendall: pairs.tau_b()?,
        q_recognition: recognition_rate(predicted, actual, f_percent)?,
        f_percent,
        pairs,
    })
}

fn cmp<S: Scalar>(a: S, b: S) -> Ordering {
    a.partial_cmp(&b).expect("scores must not be NaN")
}

/// Kendall's tau-b over unordered node pairs.
pub fn kendall_tau_b<S: Scalar>(predicted: &[S], actual: &[S]) -> Result<f64> {
    kendall_pairs(predicted, actual)?.tau_b()
}

/// Pair classification in `O(N log N)`: sort by (actual, predicted), count
/// tie groups, and count discordant pairs as merge-sort inversions of the
/// predicted sequence.
pub fn kendall_pairs<S: Scalar>(predicted: &[S], actual: &[S]) -> Result<PairCounts> {
    let n = predicted.len();
    if n != actual.len() {
        return Err(Error::LengthMismatch {
            left: n,
            right: actual.len(),
        });
    }
    if n < 2 {
        return Err(Error::UndefinedCorrelation("fewer than two nodes".into()));
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| cmp(actual[i], actual[j]).then(cmp(predicted[i], predicted[j])));

    let pairs_in = |len: u64| len * len.saturating_sub(1) / 2;
    let total = pairs_in(n as u64);
    let (mut tied_actual, mut tied_both) = (0u64, 0u64);
    let mut run_a = 1u64;
    let mut run_ab = 1u64;
    for w in idx.windows(2) {
        let (i, j) = (w[0], w[1]);
        if actual[i] == actual[j] {
            run_a += 1;
            if predicted[i] == predicted[j] {
                run_ab += 1;
            } else {
                tied_both += pairs_in(run_ab);
                run_ab = 1;
            }
        } else {
            tied_actual += pairs_in(run_a);
            tied_both += pairs_in(run_ab);
            run_a = 1;
            run_ab = 1;
        }
    }
    tied_actual += pairs_in(run_a);
    tied_both += pairs_in(run_ab);

    let mut seq: Vec<S> = idx.iter().map(|&i| predicted[i]).collect();
    let mut buf = seq.clone();
    let discordant = merge_count(&mut seq, &mut buf);

    let mut tied_predicted = 0u64;
    let mut run = 1u64;
    for w in seq.windows(2) {
        if w[0] == w[1] {
            run += 1;
        } else {
            tied_predicted += pairs_in(run);
            run = 1;
        }
    }
    tied_predicted += pairs_in(run);

    let concordant = total + tied_both - tied_actual - tied_predicted - discordant;
    Ok(PairCounts {
        concordant,
        discordant,
        ties_actual: tied_actual - tied_both,
        ties_predicted: tied_predicted - tied_both,
    })
}

/// Sorts `xs` ascending and returns the number of strict inversions.
fn merge_count<S: Scalar>(xs: &mut [S], buf: &mut [S]) -> u64 {
    let n = xs.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut count = {
        let (l, r) = xs.split_at_mut(mid);
        let (bl, br) = buf.split_at_mut(mid);
        merge_count(l, bl) + merge_count(r, br)
    };
    let (mut i, mut j, mut k) = (0, mid, 0);
    while i < mid && j < n {
        if xs[j] < xs[i] {
            count += (mid - i) as u64;
            buf[k] = xs[j];
            j += 1;
        } else {
            buf[k] = xs[i];
            i += 1;
        }
        k += 1;
    }
    buf[k..k + mid - i].copy_from_slice(&xs[i..mid]);
    k += mid - i;
    buf[k..k + n - j].copy_from_slice(&xs[j..n]);
    xs.copy_from_slice(&buf[..n]);
    count
}

/// Size of the top set: `round(f% · N)` rounding halves up, at least 1.
pub fn top_set_size(n: usize, f_percent: f64) -> usize {
    ((f_percent * n as f64 / 100.0 + 0.5).floor() as usize).clamp(1, n.max(1))
}

/// Nodes ranked by descending score, ties by ascending node id.
pub fn top_nodes<S: Scalar>(scores: &[S], k: usize) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..scores.len()).collect();
    idx.sort_by(|&i, &j| cmp(scores[j], scores[i]).then(i.cmp(&j)));
    idx.truncate(k);
    idx
}

/// Fraction of the actual top-`f%` nodes also in the predicted top-`f%`.
pub fn recognition_rate<S: Scalar>(predicted: &[S], actual: &[S], f_percent: f64) -> Result<f64> {
    if predicted.len() != actual.len() {
        return Err(Error::LengthMismatch {
            left: predicted.len(),
            right: actual.len(),
        });
    }
    if !(f_percent > 0.0 && f_percent <= 100.0) {
        return Err(Error::InvalidParameter(format!("f% = {f_percent} outside (0, 100]")));
    }
    if actual.is_empty() {
        return Err(Error::InvalidParameter("empty score vectors".into()));
    }
    let k = top_set_size(actual.len(), f_percent);
    let mut top_pred = vec![false; actual.len()];
    for i in top_nodes(predicted, k) {
        top_pred[i] = true;
    }
    let hits = top_nodes(actual, k).into_iter().filter(|&i| top_pred[i]).count();
    Ok(hits as f64 / k as f64)
}

/// Means over observation starts; undefined correlations are skipped and
/// counted.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StartAverage {
    pub mean_kendall: f64,
    pub mean_recognition: f64,
    pub used: usize,
    pub excluded: usize,
}

/// Averages `(Q_k, Q_r)` per start; `None` marks an undefined `Q_k`, whose
/// start is excluded from both means.
pub fn average_over_starts(per_start: &[Option<(f64, f64)>]) -> Result<StartAverage> {
    let defined: Vec<(f64, f64)> = per_start.iter().flatten().copied().collect();
    if defined.is_empty() {
        return Err(Error::UndefinedCorrelation(format!(
            "all {} starts undefined",
            per_start.len()
        )));
    }
    let n = defined.len() as f64;
    Ok(StartAverage {
        mean_kendall: defined.iter().map(|d| d.0).sum::<f64>() / n,
        mean_recognition: defined.iter().map(|d| d.1).sum::<f64>() / n,
        used: defined.len(),
        excluded: per_start.len() - defined.len(),
    })
}
