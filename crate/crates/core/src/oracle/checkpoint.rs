//! Resume support for long table runs.
//!
//! The checkpoint file lists the canonical forms (hex) of completed subtree
//! roots, sorted, one per line. The per-mu maxima accumulated so far live in
//! a JSON sidecar at `<checkpoint>.table`, together with the run parameters,
//! so a resumed run reproduces the uninterrupted result exactly. The sidecar
//! is always written before the checkpoint, and both are replaced atomically.

use std::collections::BTreeSet;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::canon::CanonicalForm;

use super::table::Accumulator;
use super::OracleError;

/// Run parameters a checkpoint is only valid for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub(crate) struct RunKey {
    pub d: usize,
    pub n_max: usize,
    pub split: usize,
}

#[derive(Debug, Serialize, Deserialize)]
struct Sidecar {
    key: RunKey,
    records: Vec<SidecarRecord>,
}

#[derive(Debug, Serialize, Deserialize)]
struct SidecarRecord {
    mu: usize,
    edges: usize,
    form: String,
}

#[derive(Debug)]
pub(crate) struct Checkpoint {
    path: PathBuf,
    key: RunKey,
    completed: BTreeSet<String>,
}

pub(crate) fn sidecar_path(path: &Path) -> PathBuf {
    let mut name = path.as_os_str().to_owned();
    name.push(".table");
    PathBuf::from(name)
}

fn io_error(path: &Path, source: io::Error) -> OracleError {
    OracleError::CheckpointIo {
        path: path.to_path_buf(),
        source,
    }
}

fn invalid(path: &Path, reason: impl Into<String>) -> OracleError {
    OracleError::CheckpointInvalid {
        path: path.to_path_buf(),
        reason: reason.into(),
    }
}

fn write_atomic(path: &Path, contents: &str) -> Result<(), OracleError> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, contents).map_err(|e| io_error(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| io_error(path, e))
}

impl Checkpoint {
    /// Opens (or starts) a checkpoint, returning the maxima saved with it.
    pub(crate) fn open(path: &Path, key: RunKey) -> Result<(Self, Accumulator), OracleError> {
        let mut checkpoint = Checkpoint {
            path: path.to_path_buf(),
            key,
            completed: BTreeSet::new(),
        };
        let text = match fs::read_to_string(path) {
            Ok(text) => text,
            Err(e) if e.kind() == io::ErrorKind::NotFound => String::new(),
            Err(e) => return Err(io_error(path, e)),
        };
        for (i, line) in text.lines().map(str::trim).enumerate() {
            if line.is_empty() {
                continue;
            }
            if CanonicalForm::from_hex(line).is_none() {
                return Err(invalid(
                    path,
                    format!("line {} is not a hex canonical form", i + 1),
                ));
            }
            checkpoint.completed.insert(line.to_string());
        }
        let mut acc = Accumulator::default();
        if checkpoint.completed.is_empty() {
            return Ok((checkpoint, acc));
        }
        let side = sidecar_path(path);
        let text = fs::read_to_string(&side).map_err(|e| io_error(&side, e))?;
        let sidecar: Sidecar =
            serde_json::from_str(&text).map_err(|e| invalid(&side, e.to_string()))?;
        if sidecar.key != key {
            return Err(invalid(
                &side,
                format!("written for {:?}, this run is {:?}", sidecar.key, key),
            ));
        }
        for r in sidecar.records {
            let form = CanonicalForm::from_hex(&r.form)
                .ok_or_else(|| invalid(&side, format!("bad canonical form for mu {}", r.mu)))?;
            acc.offer(r.mu, r.edges, &form);
        }
        Ok((checkpoint, acc))
    }

    pub(crate) fn is_done(&self, root: &CanonicalForm) -> bool {
        self.completed.contains(&root.to_hex())
    }

    /// Marks `root` complete; `acc` must already include its subtree.
    pub(crate) fn complete(
        &mut self,
        root: &CanonicalForm,
        acc: &Accumulator,
    ) -> Result<(), OracleError> {
        self.completed.insert(root.to_hex());
        let sidecar = Sidecar {
            key: self.key,
            records: acc
                .entries()
                .map(|(mu, edges, form)| SidecarRecord {
                    mu,
                    edges,
                    form: form.to_hex(),
                })
                .collect(),
        };
        let json = serde_json::to_string_pretty(&sidecar).expect("sidecar serializes");
        write_atomic(&sidecar_path(&self.path), &json)?;
        let mut lines = String::new();
        for hex in &self.completed {
            lines.push_str(hex);
            lines.push('\n');
        }
        write_atomic(&self.path, &lines)
    }
}
