//! Optional on-disk memo of reports, keyed by a hash of the canonical
//! presentation and the caps that affect the result.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use hex::encode;
use hfk_core::invariants::HFKReport;
use hfk_core::pipeline::{KnotInput, PipelineConfig};
use sha2::{Digest, Sha256};

use crate::error::CliError;

pub fn cache_key(input: &KnotInput, cfg: &PipelineConfig) -> String {
    let mut h = Sha256::new();
    h.update(input.presentation.kind().to_string());
    h.update(b":");
    h.update(input.presentation.canonical_text());
    h.update(b"|pd:");
    if let Some(d) = &input.planar {
        h.update(d.to_string());
    }
    h.update(format!("|{}|{}", cfg.max_grid, cfg.max_crossings));
    encode(h.finalize())
}

#[derive(Debug)]
pub struct Cache {
    path: PathBuf,
    entries: BTreeMap<String, HFKReport>,
    dirty: bool,
}

impl Cache {
    /// Opens a cache file, starting empty if it does not exist.
    pub fn open(path: &Path) -> Result<Self, CliError> {
        let entries = match std::fs::read_to_string(path) {
            Ok(text) => serde_json::from_str(&text).map_err(|e| CliError::Cache(e.to_string()))?,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => BTreeMap::new(),
            Err(e) => {
                return Err(CliError::Io {
                    path: path.display().to_string(),
                    message: e.to_string(),
                })
            }
        };
        Ok(Self {
            path: path.to_path_buf(),
            entries,
            dirty: false,
        })
    }

    pub fn get(&self, key: &str, id: &str) -> Option<HFKReport> {
        self.entries.get(key).map(|r| HFKReport {
            knot_id: id.to_string(),
            ..r.clone()
        })
    }

    pub fn insert(&mut self, key: String, report: &HFKReport) {
        self.entries.insert(key, report.clone());
        self.dirty = true;
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn save(&mut self) -> Result<(), CliError> {
        if !self.dirty {
            return Ok(());
        }
        let text = serde_json::to_string(&self.entries).expect("cache serializes");
        std::fs::write(&self.path, text).map_err(|e| CliError::Io {
            path: self.path.display().to_string(),
            message: e.to_string(),
        })?;
        self.dirty = false;
        Ok(())
    }
}
