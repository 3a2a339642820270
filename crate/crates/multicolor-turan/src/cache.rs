//! Append-only result cache for solver runs.
//!
//! Records live in a JSON-lines file, one record per line, keyed by
//! `(n, k, pattern key)` where the pattern key is the vertex count plus the
//! canonical multiplicity vector.  The file is only ever appended to;
//! lookups prefer the newest exact record and fall back to the newest
//! bounded one, so an exact result is never shadowed by a later partial
//! run.  Records carry everything a run reports, which makes replays from
//! cache byte-identical to the fresh run that produced them.

use std::fs::OpenOptions;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::canon::canonical_weights;
use crate::error::{Error, Result};
use crate::graphs::MultiGraph;
use crate::pattern::PatternMultigraph;
use crate::solver::{BoundStatus, Classification, ExkResult};

/// Stable identity of a pattern: vertex count and canonical multiplicity
/// vector.
pub fn pattern_key(pattern: &PatternMultigraph) -> String {
    let w = canonical_weights(pattern.r(), pattern.weights().weights());
    format!(
        "{}:{}",
        pattern.r(),
        w.iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    )
}

/// One cached solve.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CacheRecord {
    pub n: usize,
    pub k: u32,
    pub pattern: String,
    pub value: u64,
    pub status: BoundStatus,
    pub classification: Classification,
    /// Canonical weight vectors of the optima.
    pub optima: Vec<Vec<u32>>,
    pub candidate_i: Option<u64>,
    pub candidate_ii: u64,
    pub work: u64,
    pub wall_ms: u64,
    pub unix_time: u64,
    pub version: String,
}

impl CacheRecord {
    /// Captures a solver result together with run metadata.
    pub fn from_result(result: &ExkResult, pattern: &PatternMultigraph, wall_ms: u64) -> Self {
        CacheRecord {
            n: result.n,
            k: result.k,
            pattern: pattern_key(pattern),
            value: result.value,
            status: result.status,
            classification: result.classification,
            optima: result
                .optima
                .iter()
                .map(|g| g.weights().to_vec())
                .collect(),
            candidate_i: result.candidate_i,
            candidate_ii: result.candidate_ii,
            work: result.work,
            wall_ms,
            unix_time: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    /// Rebuilds the solver result this record captured.
    pub fn to_result(&self) -> Result<ExkResult> {
        let optima = self
            .optima
            .iter()
            .map(|w| MultiGraph::from_weights(self.n, self.k, w.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExkResult {
            n: self.n,
            k: self.k,
            value: self.value,
            optima,
            candidate_i: self.candidate_i,
            candidate_ii: self.candidate_ii,
            classification: self.classification,
            status: self.status,
            work: self.work,
        })
    }
}

/// Handle on the cache file inside a cache directory.
#[derive(Clone, Debug)]
pub struct ResultCache {
    path: PathBuf,
}

/// File name of the record file inside the cache directory.
pub const CACHE_FILE: &str = "exk-records.jsonl";

impl ResultCache {
    /// Opens (creating the directory if needed) the cache under `dir`.
    pub fn open(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref();
        std::fs::create_dir_all(dir)?;
        Ok(ResultCache {
            path: dir.join(CACHE_FILE),
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// All readable records in file order; unreadable lines are skipped.
    pub fn records(&self) -> Result<Vec<CacheRecord>> {
        if !self.path.exists() {
            return Ok(Vec::new());
        }
        let text = std::fs::read_to_string(&self.path)?;
        // Unreadable lines are skipped rather than fatal: an interrupted
        // append must not poison every later run.
        Ok(text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .filter_map(|l| serde_json::from_str(l).ok())
            .collect())
    }

    /// The record to reuse for `(n, k, pattern)`: the newest exact one, or
    /// failing that the newest bounded one.
    pub fn lookup(&self, n: usize, k: u32, pattern: &str) -> Result<Option<CacheRecord>> {
        let mut bounded = None;
        let mut exact = None;
        for rec in self.records()? {
            if rec.n == n && rec.k == k && rec.pattern == pattern {
                match rec.status {
                    BoundStatus::Exact => exact = Some(rec),
                    BoundStatus::Bounded { .. } => bounded = Some(rec),
                }
            }
        }
        Ok(exact.or(bounded))
    }

    /// Appends one record.  Concurrent writers must serialize through one
    /// handle; appends never rewrite earlier lines.
    pub fn append(&self, record: &CacheRecord) -> Result<()> {
        let line = serde_json::to_string(record)
            .map_err(|e| Error::contract(format!("cache record serialization failed: {e}")))?;
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?;
        writeln!(file, "{line}")?;
        Ok(())
    }
}
