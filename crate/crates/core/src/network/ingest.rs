//! Plain-text contact list ingestion.

use std::collections::{BTreeMap, HashSet};
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use log::warn;

use super::{Contact, TemporalNetwork, Timestep};
use crate::error::{Error, Result};

/// Column layout of an edge list. Fields are split on commas and/or
/// whitespace; `cols` gives the zero-based positions of `u`, `v` and `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeListFormat {
    pub cols: [usize; 3],
}

impl Default for EdgeListFormat {
    fn default() -> Self {
        EdgeListFormat { cols: [0, 1, 2] }
    }
}

impl EdgeListFormat {
    /// Parses a `u,v,t` column spec such as `"1,2,0"`.
    pub fn from_cols(spec: &str) -> Result<Self> {
        let cols: Vec<usize> = spec
            .split(',')
            .map(|s| s.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::InvalidParameter(format!("column spec {spec:?}: {e}")))?;
        match cols.as_slice() {
            &[u, v, t] => Ok(EdgeListFormat { cols: [u, v, t] }),
            _ => Err(Error::InvalidParameter(format!(
                "column spec {spec:?} must name exactly three columns"
            ))),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IngestReport {
    pub rows: usize,
    pub comment_lines: usize,
    pub self_loops_rejected: usize,
    pub duplicates_collapsed: usize,
}

pub fn parse_contact_list(
    path: impl AsRef<Path>,
    format: &EdgeListFormat,
) -> Result<(TemporalNetwork, IngestReport)> {
    let path = path.as_ref();
    let file = File::open(path)?;
    parse_contacts(BufReader::new(file), path, format)
}

/// Parses an edge list. Node labels are remapped to dense ids in ascending
/// label order (numeric when every label is an integer, lexicographic
/// otherwise); the mapping is kept as the network's labels.
pub fn parse_contacts<R: BufRead>(
    reader: R,
    path: &Path,
    format: &EdgeListFormat,
) -> Result<(TemporalNetwork, IngestReport)> {
    let mut report = IngestReport::default();
    let mut raw: Vec<(String, String, Timestep)> = Vec::new();
    let needed = format.cols.iter().max().unwrap() + 1;
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed.starts_with('#') {
            report.comment_lines += 1;
            continue;
        }
        let fields: Vec<&str> = trimmed
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|f| !f.is_empty())
            .collect();
        let err = |message: String| Error::Parse {
            path: path.to_path_buf(),
            line: lineno,
            message,
        };
        if fields.len() < needed {
            return Err(err(format!(
                "expected at least {needed} fields, found {}",
                fields.len()
            )));
        }
        let [cu, cv, ct] = format.cols;
        let t: i64 = fields[ct]
            .parse()
            .map_err(|_| err(format!("timestep {:?} is not an integer", fields[ct])))?;
        if t < 1 || t > i64::from(Timestep::MAX) {
            return Err(err(format!("timestep {t} outside 1..={}", Timestep::MAX)));
        }
        report.rows += 1;
        if fields[cu] == fields[cv] {
            warn!("{}:{lineno}: self-loop on {} rejected", path.display(), fields[cu]);
            report.self_loops_rejected += 1;
            continue;
        }
        raw.push((fields[cu].to_string(), fields[cv].to_string(), t as Timestep));
    }

    let labels = sorted_labels(raw.iter().flat_map(|(u, v, _)| [u.as_str(), v.as_str()]));
    let index: BTreeMap<&str, usize> = labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    let mut seen = HashSet::new();
    let mut contacts = Vec::with_capacity(raw.len());
    for (u, v, t) in &raw {
        let c = Contact::new(index[u.as_str()], index[v.as_str()], *t).unwrap();
        if seen.insert(c) {
            contacts.push(c);
        } else {
            report.duplicates_collapsed += 1;
        }
    }
    let net = TemporalNetwork::new(labels.len(), contacts)?.with_labels(labels);
    Ok((net, report))
}

fn sorted_labels<'a>(raw: impl Iterator<Item = &'a str>) -> Vec<String> {
    let mut labels: Vec<&str> = raw.collect();
    labels.sort_unstable();
    labels.dedup();
    let numeric: Option<Vec<i64>> = labels.iter().map(|l| l.parse().ok()).collect();
    if let Some(nums) = numeric {
        let mut pairs: Vec<(i64, &str)> = nums.into_iter().zip(labels.iter().copied()).collect();
        pairs.sort_unstable();
        pairs.into_iter().map(|(_, l)| l.to_string()).collect()
    } else {
        labels.into_iter().map(str::to_string).collect()
    }
}

/// Writes the `original_id,dense_id` table.
pub fn write_remap(net: &TemporalNetwork, path: impl AsRef<Path>) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(["original_id", "dense_id"])?;
    for (dense, label) in net.labels().iter().enumerate() {
        w.write_record([label.as_str(), &dense.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

/// Writes the network as a dense-id `u v t` edge list.
pub fn write_edge_list(net: &TemporalNetwork, path: impl AsRef<Path>) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "# u v t  (N={}, T={})", net.n_nodes(), net.horizon())?;
    for c in net.contacts() {
        writeln!(w, "{} {} {}", c.u, c.v, c.t)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<(TemporalNetwork, IngestReport)> {
        parse_contacts(text.as_bytes(), Path::new("mem"), &EdgeListFormat::default())
    }

    #[test]
    fn simple_rows() {
        let (net, _) = parse("0 1 1\n1 2 2\n").unwrap();
        assert_eq!((net.n_nodes(), net.horizon(), net.n_contacts()), (3, 2, 2));
    }

    #[test]
    fn remap_and_symmetry() {
        let (net, report) = parse("# header\n5,9,3\n9 5 3\n").unwrap();
        assert_eq!(net.n_nodes(), 2);
        assert_eq!(net.n_contacts(), 1);
        assert_eq!(net.labels(), &["5", "9"]);
        assert_eq!(report.duplicates_collapsed, 1);
        assert_eq!(report.comment_lines, 1);
    }

    #[test]
    fn duplicates_collapse() {
        let (net, _) = parse("0 1 1\n0 1 1\n2 3 7\n").unwrap();
        assert_eq!(net.n_contacts(), 2);
        assert_eq!(net.horizon(), 7);
    }

    #[test]
    fn numeric_label_order() {
        let (net, _) = parse("10 9 1\n100 9 2\n").unwrap();
        assert_eq!(net.labels(), &["9", "10", "100"]);
    }

    #[test]
    fn self_loops_counted() {
        let (net, report) = parse("0 0 1\n0 1 2\n").unwrap();
        assert_eq!(report.self_loops_rejected, 1);
        assert_eq!(net.n_contacts(), 1);
    }

    #[test]
    fn malformed_row_reports_line() {
        match parse("0 1 1\n0 1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse("0 1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn column_selection() {
        let fmt = EdgeListFormat::from_cols("1,2,0").unwrap();
        let (net, _) = parse_contacts("20 a b\n40 b c\n".as_bytes(), Path::new("m"), &fmt).unwrap();
        assert_eq!(net.labels(), &["a", "b", "c"]);
        assert_eq!(net.horizon(), 40);
        assert!(EdgeListFormat::from_cols("1,2").is_err());
    }
}
