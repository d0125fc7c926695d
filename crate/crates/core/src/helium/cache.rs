//! Persistent memo for radial integrals.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::RwLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Bumped whenever integral conventions change.
pub const CACHE_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum IntegralKind {
    /// ⟨ns|1/r|1s⟩
    X,
    /// Rˡ(nl, n′l; 1s, 1s)
    Y,
    /// R⁰(1s 2s; 1s 2s)
    Direct,
    /// R⁰(1s 2s; 2s 1s)
    Exchange,
}

impl IntegralKind {
    fn tag(self) -> &'static str {
        match self {
            IntegralKind::X => "X",
            IntegralKind::Y => "Y",
            IntegralKind::Direct => "J",
            IntegralKind::Exchange => "K",
        }
    }
}

/// Cache key; the charge is rounded to 12 significant digits.
pub fn cache_key(kind: IntegralKind, n: u32, n_prime: u32, l: u32, z_star: f64) -> String {
    format!("{}|{n}|{n_prime}|{l}|{:.11e}", kind.tag(), z_star)
}

/// What happened when a cache file was opened.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoadStatus {
    Loaded(usize),
    Missing,
    /// Unreadable or stamped with another version; starting empty.
    Rebuilt(String),
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    entries: BTreeMap<String, f64>,
}

#[derive(Debug, Default)]
pub struct IntegralCache {
    entries: RwLock<BTreeMap<String, f64>>,
    hits: AtomicU64,
    misses: AtomicU64,
}

impl IntegralCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Opens `path`. Corrupt or stale files are discarded with a warning.
    pub fn load(path: &Path) -> (Self, LoadStatus) {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return (Self::new(), LoadStatus::Missing),
            Err(e) => return Self::rebuilt(path, format!("unreadable: {e}")),
        };
        match serde_json::from_str::<CacheFile>(&text) {
            Ok(f) if f.version == CACHE_VERSION => {
                let n = f.entries.len();
                let cache = IntegralCache {
                    entries: RwLock::new(f.entries),
                    ..Self::default()
                };
                (cache, LoadStatus::Loaded(n))
            }
            Ok(f) => Self::rebuilt(path, format!("version {} != {}", f.version, CACHE_VERSION)),
            Err(e) => Self::rebuilt(path, format!("corrupt: {e}")),
        }
    }

    fn rebuilt(path: &Path, reason: String) -> (Self, LoadStatus) {
        log::warn!("integral cache {}: {reason}; rebuilding", path.display());
        (Self::new(), LoadStatus::Rebuilt(reason))
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let file = CacheFile {
            version: CACHE_VERSION,
            entries: self.entries.read().expect("cache lock poisoned").clone(),
        };
        let text = serde_json::to_string_pretty(&file).map_err(|source| Error::Json {
            path: path.to_path_buf(),
            source,
        })?;
        std::fs::write(path, text + "\n").map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })
    }

    pub fn get_or_compute(&self, key: String, compute: impl FnOnce() -> Result<f64>) -> Result<f64> {
        if let Some(&v) = self.entries.read().expect("cache lock poisoned").get(&key) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return Ok(v);
        }
        self.misses.fetch_add(1, Ordering::Relaxed);
        let v = compute()?;
        self.entries.write().expect("cache lock poisoned").insert(key, v);
        Ok(v)
    }

    pub fn hits(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> u64 {
        self.misses.load(Ordering::Relaxed)
    }

    pub fn len(&self) -> usize {
        self.entries.read().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
