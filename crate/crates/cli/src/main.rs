//! `tempo`: influence prediction experiments on temporal contact networks.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use tempo_core::derive::{centrality, Observation};
use tempo_core::harness::best::{best_quality, write_best};
use tempo_core::harness::randomize::{randomization_study, write_replica_rows};
use tempo_core::harness::synthetic::{planted_communities, SyntheticSpec};
use tempo_core::harness::{dataset_report, load_network, read_rows, run_sweep, threads, SweepConfig};
use tempo_core::network::{parse_contact_list, write_edge_list, write_remap, EdgeListFormat};
use tempo_core::si::{influence_all, InfluenceVector, SiConfig};
use tempo_core::{eval, Metric, Mode, TemporalNetwork, Timestep};

#[derive(Parser)]
#[command(name = "tempo", version, about)]
struct Cli {
    /// More log output (-v info, -vv debug). RUST_LOG overrides.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct DatasetArgs {
    /// Contact list: one `u v t` contact per line, `#` comments.
    dataset: PathBuf,
    /// Zero-based column positions of u, v and t.
    #[arg(long, default_value = "0,1,2")]
    cols: String,
    /// Keep only the largest connected component (time re-compacted).
    #[arg(long)]
    lcc: bool,
}

impl DatasetArgs {
    fn load(&self) -> Result<TemporalNetwork> {
        let (net, report) = parse_contact_list(&self.dataset, &EdgeListFormat::from_cols(&self.cols)?)
            .with_context(|| format!("reading {}", self.dataset.display()))?;
        log::info!("{report:?}");
        Ok(if self.lcc { net.largest_connected_component()? } else { net })
    }
}

/// Sweep grid: a JSON config file, with any field overridden by a flag.
/// Fractions of T (t0, tau, phi * tau) are floored to whole timesteps.
#[derive(Args, Default)]
struct SweepArgs {
    /// JSON file with any subset of the grid fields.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    dataset: Option<PathBuf>,
    #[arg(long)]
    cols: Option<String>,
    #[arg(long)]
    lcc: bool,
    #[arg(long, value_delimiter = ',')]
    betas: Option<Vec<f64>>,
    /// Spreading starts as fractions of T.
    #[arg(long, value_delimiter = ',')]
    t0_fractions: Option<Vec<f64>>,
    /// Spreading window length as a fraction of T.
    #[arg(long)]
    tau_fraction: Option<f64>,
    /// Observation window lengths as fractions of tau.
    #[arg(long, value_delimiter = ',')]
    phis: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    hops: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    alphas: Option<Vec<f64>>,
    #[arg(long)]
    runs: Option<usize>,
    #[arg(long, env = "TEMPO_SEED")]
    master_seed: Option<u64>,
    /// Top-set size for the recognition rate, in percent of N.
    #[arg(long)]
    f_percent: Option<f64>,
    #[arg(long, value_delimiter = ',')]
    metrics: Option<Vec<Metric>>,
    #[arg(long, value_delimiter = ',')]
    modes: Option<Vec<Mode>>,
    #[arg(long)]
    replicas: Option<usize>,
    /// Directory for cached influence vectors.
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

impl SweepArgs {
    fn resolve(&self) -> Result<SweepConfig> {
        let mut cfg = match &self.config {
            Some(p) => SweepConfig::from_json_file(p).with_context(|| format!("reading {}", p.display()))?,
            None => SweepConfig::default(),
        };
        macro_rules! over {
            ($($f:ident),*) => {$(
                if let Some(v) = &self.$f {
                    cfg.$f = v.clone().into();
                }
            )*};
        }
        over!(dataset, cols, betas, t0_fractions, tau_fraction, phis, hops, alphas, runs, master_seed);
        over!(f_percent, metrics, modes, replicas, cache_dir);
        cfg.lcc |= self.lcc;
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse a contact list and write it back with dense ids.
    Ingest {
        #[command(flatten)]
        data: DatasetArgs,
        /// Renumber timesteps to 1..T' keeping only active ones.
        #[arg(long)]
        compact: bool,
        #[arg(long)]
        out: PathBuf,
        /// Where to write the original_id,dense_id table.
        #[arg(long)]
        remap: Option<PathBuf>,
    },
    /// Dataset statistics as statistic,value CSV.
    Stats {
        #[command(flatten)]
        grid: SweepArgs,
        /// Also simulate mean influence per beta.
        #[arg(long)]
        influence: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Score every node with one metric (times in whole timesteps).
    Centrality {
        #[command(flatten)]
        data: DatasetArgs,
        #[arg(long)]
        metric: Metric,
        #[arg(long, default_value = "partial")]
        mode: Mode,
        #[arg(long, default_value_t = 0)]
        t0: Timestep,
        /// Spreading window length; defaults to T - t0.
        #[arg(long)]
        tau: Option<Timestep>,
        /// Observation window length for partial modes; defaults to tau.
        #[arg(long)]
        phi_len: Option<Timestep>,
        #[arg(short, long, default_value_t = 2)]
        m: usize,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monte-Carlo SI influence of every node.
    Simulate {
        #[command(flatten)]
        data: DatasetArgs,
        #[arg(long)]
        beta: f64,
        #[arg(long, default_value_t = 0)]
        t0: Timestep,
        /// Spreading window length; defaults to T - t0.
        #[arg(long)]
        tau: Option<Timestep>,
        #[arg(long, default_value_t = 500)]
        runs: usize,
        #[arg(long, env = "TEMPO_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Kendall tau-b and recognition rate of a score file against influence.
    Evaluate {
        /// CSV with `node` and `value` columns.
        #[arg(long)]
        predicted: PathBuf,
        /// Influence CSV as written by `simulate`.
        #[arg(long)]
        influence: PathBuf,
        #[arg(long, default_value_t = 20.0)]
        f_percent: f64,
    },
    /// Full parameter sweep into a results CSV, resumable.
    Sweep {
        #[command(flatten)]
        grid: SweepArgs,
        #[arg(long)]
        out: PathBuf,
        /// Continue an interrupted sweep from its checkpoint.
        #[arg(long)]
        resume: bool,
    },
    /// Sweep over timestamp-shuffled replicas; per-combination mean and std.
    Randomize {
        #[command(flatten)]
        grid: SweepArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Best start-averaged quality per (metric, mode, phi, beta).
    Best {
        /// Results CSV from `sweep` or `randomize`.
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a planted-community test network.
    Synth {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 150)]
        nodes: usize,
        #[arg(long, default_value_t = 5000)]
        contacts: usize,
        #[arg(long, default_value_t = 2000)]
        horizon: Timestep,
        #[arg(long, default_value_t = 5)]
        communities: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn window(net: &TemporalNetwork, t0: Timestep, tau: Option<Timestep>) -> Result<Timestep> {
    if t0 >= net.horizon() {
        bail!("t0 = {t0} leaves no time before T = {}", net.horizon());
    }
    Ok(tau.unwrap_or(net.horizon() - t0))
}

fn read_scores(path: &Path) -> Result<Vec<f64>> {
    let mut rd = csv::Reader::from_path(path).with_context(|| format!("reading {}", path.display()))?;
    let h = rd.headers()?.clone();
    let node = h.iter().position(|c| c == "node").context("score file lacks a node column")?;
    let value = h.iter().position(|c| c == "value").context("score file lacks a value column")?;
    let mut pairs: Vec<(usize, f64)> = Vec::new();
    for rec in rd.records() {
        let rec = rec?;
        pairs.push((rec[node].parse()?, rec[value].parse()?));
    }
    pairs.sort_by_key(|p| p.0);
    if pairs.iter().enumerate().any(|(i, p)| p.0 != i) {
        bail!("{} must list nodes 0..N once each", path.display());
    }
    Ok(pairs.into_iter().map(|p| p.1).collect())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Ingest {
            data,
            compact,
            out,
            remap,
        } => {
            let mut net = data.load()?;
            if compact {
                net = net.compact_timesteps()?;
            }
            write_edge_list(&net, &out)?;
            if let Some(r) = remap {
                write_remap(&net, r)?;
            }
            eprintln!("N = {}, L = {}, T = {}", net.n_nodes(), net.n_contacts(), net.horizon());
        }
        Command::Stats { grid, influence, out } => {
            let cfg = grid.resolve()?;
            let net = load_network(&cfg)?;
            let stats = threads::install(|| dataset_report(&net, &cfg, influence))??;
            stats.write_csv(output(out.as_deref())?)?;
        }
        Command::Centrality {
            data,
            metric,
            mode,
            t0,
            tau,
            phi_len,
            m,
            alpha,
            out,
        } => {
            let net = data.load()?;
            let tau = window(&net, t0, tau)?;
            let obs = Observation {
                t0,
                tau,
                phi_len: phi_len.unwrap_or(tau),
                hop_limit: m,
                alpha,
            };
            let v = threads::install(|| centrality::<f64>(metric, mode, &net, &obs))??;
            let mut w = csv::Writer::from_writer(output(out.as_deref())?);
            w.write_record(["node", "label", "value"])?;
            for (i, x) in v.values.iter().enumerate() {
                w.write_record([i.to_string(), net.labels()[i].clone(), x.to_string()])?;
            }
            w.flush()?;
        }
        Command::Simulate {
            data,
            beta,
            t0,
            tau,
            runs,
            seed,
            out,
        } => {
            let net = data.load()?;
            let tau = window(&net, t0, tau)?;
            let cfg = SiConfig::new(beta, t0, tau, runs, seed)?;
            let inf = threads::install(|| influence_all(&net, &cfg))??;
            inf.write_csv(output(out.as_deref())?)?;
        }
        Command::Evaluate {
            predicted,
            influence,
            f_percent,
        } => {
            let p = read_scores(&predicted)?;
            let inf = InfluenceVector::read_csv(BufReader::new(
                File::open(&influence).with_context(|| format!("reading {}", influence.display()))?,
            ))?;
            let qk = eval::kendall_tau_b(&p, &inf.mean).map_or(f64::NAN, |q| q);
            let qr = eval::recognition_rate(&p, &inf.mean, f_percent)?;
            println!("Qk,Qr\n{qk},{qr}");
        }
        Command::Sweep { grid, out, resume } => {
            let cfg = grid.resolve()?;
            let net = load_network(&cfg)?;
            let s = threads::install(|| run_sweep(&net, &cfg, &out, resume))??;
            eprintln!(
                "{} rows over {} windows ({} resumed) -> {}",
                s.rows_written,
                s.windows,
                s.windows_resumed,
                out.display()
            );
        }
        Command::Randomize { grid, out } => {
            let cfg = grid.resolve()?;
            let net = load_network(&cfg)?;
            let rows = threads::install(|| randomization_study(&net, &cfg))??;
            write_replica_rows(output(Some(&out))?, &rows)?;
        }
        Command::Best { input, out } => {
            let rows = read_rows(File::open(&input).with_context(|| format!("reading {}", input.display()))?)?;
            write_best(output(out.as_deref())?, &best_quality(&rows))?;
        }
        Command::Synth {
            out,
            nodes,
            contacts,
            horizon,
            communities,
            seed,
        } => {
            let net = planted_communities(&SyntheticSpec {
                n_nodes: nodes,
                n_contacts: contacts,
                horizon,
                communities,
                seed,
                ..SyntheticSpec::default()
            })?;
            write_edge_list(&net, &out)?;
        }
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    if let Err(e) = run(cli) {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}
