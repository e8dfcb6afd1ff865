use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::metric::{Metric, Mode};
use crate::network::Timestep;

pub const RESULTS_HEADER: [&str; 11] =
    ["metric", "mode", "beta", "t0", "phi", "m", "alpha", "Qk", "Qr", "runs", "seed"];

/// One evaluated predictor at one spreading start.
#[derive(Clone, Debug, PartialEq)]
pub struct ResultRow {
    pub metric: Metric,
    pub mode: Mode,
    pub beta: f64,
    pub t0: Timestep,
    pub phi: Option<f64>,
    pub m: Option<usize>,
    pub alpha: Option<f64>,
    /// `None` when the correlation is undefined (constant ranking).
    pub qk: Option<f64>,
    pub qr: f64,
    pub runs: usize,
    pub seed: u64,
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(String::new, |x| x.to_string())
}

pub(crate) fn fmt_q(q: Option<f64>) -> String {
    q.map_or_else(|| "NaN".to_string(), |x| x.to_string())
}

impl ResultRow {
    pub fn record(&self) -> [String; 11] {
        [
            self.metric.to_string(),
            self.mode.to_string(),
            self.beta.to_string(),
            self.t0.to_string(),
            opt(self.phi),
            opt(self.m),
            opt(self.alpha),
            fmt_q(self.qk),
            self.qr.to_string(),
            self.runs.to_string(),
            self.seed.to_string(),
        ]
    }
}

pub fn write_rows<W: Write>(out: W, rows: &[ResultRow], header: bool) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    if header {
        w.write_record(RESULTS_HEADER)?;
    }
    for r in rows {
        w.write_record(r.record())?;
    }
    w.flush()?;
    Ok(())
}

fn parse_opt<T: std::str::FromStr>(s: &str, what: &str) -> Result<Option<T>> {
    if s.is_empty() {
        return Ok(None);
    }
    s.parse()
        .map(Some)
        .map_err(|_| Error::Config(format!("bad {what} value {s:?}")))
}

fn parse_q(s: &str) -> Result<Option<f64>> {
    let v: f64 = s
        .parse()
        .map_err(|_| Error::Config(format!("bad quality value {s:?}")))?;
    Ok((!v.is_nan()).then_some(v))
}

/// Reads a results CSV. Columns are located by name; replica-averaged files
/// are read through their `Qk_mean`/`Qr_mean` columns.
pub fn read_rows<R: Read>(input: R) -> Result<Vec<ResultRow>> {
    let mut rd = csv::Reader::from_reader(input);
    let headers = rd.headers()?.clone();
    let col = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::Config(format!("results CSV lacks column {name:?}")))
    };
    let idx: Vec<usize> = RESULTS_HEADER
        .iter()
        .map(|h| match *h {
            "Qk" | "Qr" => col(h).or_else(|_| col(&format!("{h}_mean"))),
            _ => col(h),
        })
        .collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for rec in rd.records() {
        let rec = rec?;
        let f = |i: usize| rec.get(idx[i]).unwrap_or("");
        let num = |i: usize, what: &str| -> Result<f64> {
            f(i).parse()
                .map_err(|_| Error::Config(format!("bad {what} value {:?}", f(i))))
        };
        rows.push(ResultRow {
            metric: f(0).parse()?,
            mode: f(1).parse()?,
            beta: num(2, "beta")?,
            t0: parse_opt(f(3), "t0")?.unwrap_or(0),
            phi: parse_opt(f(4), "phi")?,
            m: parse_opt(f(5), "m")?,
            alpha: parse_opt(f(6), "alpha")?,
            qk: parse_q(f(7))?,
            qr: parse_q(f(8))?.unwrap_or(f64::NAN),
            runs: parse_opt(f(9), "runs")?.unwrap_or(0),
            seed: parse_opt(f(10), "seed")?.unwrap_or(0),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let rows = vec![
            ResultRow {
                metric: Metric::TemporalReachability,
                mode: Mode::Partial,
                beta: 0.01,
                t0: 12,
                phi: Some(0.25),
                m: Some(3),
                alpha: Some(0.9999),
                qk: Some(0.123456789),
                qr: 0.5,
                runs: 500,
                seed: 7,
            },
            ResultRow {
                metric: Metric::Closeness,
                mode: Mode::FullTemporal,
                beta: 1.0,
                t0: 0,
                phi: None,
                m: None,
                alpha: None,
                qk: None,
                qr: 0.25,
                runs: 1,
                seed: 7,
            },
        ];
        let mut buf = Vec::new();
        write_rows(&mut buf, &rows, true).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("metric,mode,beta,t0,phi,m,alpha,Qk,Qr,runs,seed\n"));
        assert!(text.contains("closeness,full-temporal,1,0,,,,NaN,0.25,1,7"));
        assert_eq!(read_rows(buf.as_slice()).unwrap(), rows);
    }
}
