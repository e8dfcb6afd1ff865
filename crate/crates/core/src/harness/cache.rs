use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::network::TemporalNetwork;
use crate::si::{influence_all, InfluenceVector, SiConfig};

/// Content hash of a network: node count and every contact.
pub fn network_digest(net: &TemporalNetwork) -> String {
    let mut h = Sha256::new();
    h.update((net.n_nodes() as u64).to_le_bytes());
    h.update(net.horizon().to_le_bytes());
    for c in net.contacts() {
        h.update((c.u as u64).to_le_bytes());
        h.update((c.v as u64).to_le_bytes());
        h.update(c.t.to_le_bytes());
    }
    hex::encode(h.finalize())
}

/// On-disk store of influence vectors keyed by network content and SI
/// parameters. Without a directory it just computes.
#[derive(Clone, Debug, Default)]
pub struct InfluenceCache {
    dir: Option<PathBuf>,
}

impl InfluenceCache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        InfluenceCache { dir }
    }

    pub fn key(net_digest: &str, cfg: &SiConfig) -> String {
        let mut h = Sha256::new();
        h.update(net_digest.as_bytes());
        h.update(cfg.t0.to_le_bytes());
        h.update(cfg.tau.to_le_bytes());
        h.update(cfg.beta.to_bits().to_le_bytes());
        h.update((cfg.effective_runs() as u64).to_le_bytes());
        h.update(cfg.master_seed.to_le_bytes());
        hex::encode(h.finalize())
    }

    fn path(dir: &Path, key: &str) -> PathBuf {
        dir.join(format!("influence-{key}.csv"))
    }

    pub fn get_or_compute(
        &self,
        net: &TemporalNetwork,
        net_digest: &str,
        cfg: &SiConfig,
    ) -> Result<InfluenceVector> {
        let Some(dir) = &self.dir else {
            return influence_all(net, cfg);
        };
        let path = Self::path(dir, &Self::key(net_digest, cfg));
        if let Ok(f) = File::open(&path) {
            match InfluenceVector::read_csv(BufReader::new(f)) {
                Ok(v) if v.mean.len() == net.n_nodes() => {
                    log::debug!("influence cache hit {}", path.display());
                    return Ok(v);
                }
                _ => log::warn!("ignoring unreadable cache entry {}", path.display()),
            }
        }
        let v = influence_all(net, cfg)?;
        std::fs::create_dir_all(dir)?;
        // write-then-rename so a killed run never leaves a torn entry
        let tmp = path.with_extension("csv.tmp");
        v.write_csv(File::create(&tmp)?)?;
        std::fs::rename(&tmp, &path)?;
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cached_equals_fresh() {
        let net = TemporalNetwork::from_triples(&[(0, 1, 1), (0, 1, 2), (1, 2, 3), (2, 3, 3)]).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let cache = InfluenceCache::new(Some(dir.path().to_path_buf()));
        let cfg = SiConfig::new(0.3, 0, 3, 50, 9).unwrap();
        let d = network_digest(&net);
        let a = cache.get_or_compute(&net, &d, &cfg).unwrap();
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
        let b = cache.get_or_compute(&net, &d, &cfg).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, influence_all(&net, &cfg).unwrap());
    }

    #[test]
    fn digest_sees_times() {
        let a = TemporalNetwork::from_triples(&[(0, 1, 1), (1, 2, 2)]).unwrap();
        let b = TemporalNetwork::from_triples(&[(0, 1, 2), (1, 2, 1)]).unwrap();
        assert_ne!(network_digest(&a), network_digest(&b));
    }
}
