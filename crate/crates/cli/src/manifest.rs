//! Run manifests written next to every artifact.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{Context, Result};
use serde::Serialize;
use sha2::{Digest, Sha256};
use tightcycle::FORMAT_VERSION;

#[derive(Serialize)]
struct FileDigest {
    path: String,
    sha256: String,
}

#[derive(Serialize)]
struct RunManifest<'a> {
    tool: &'static str,
    version: &'static str,
    format: &'static str,
    command: &'a [String],
    seeds: &'a [u64],
    inputs: Vec<FileDigest>,
    outputs: Vec<FileDigest>,
    wall_time_secs: f64,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Collects what a command read and wrote, then records it.
pub struct Run {
    started: Instant,
    argv: Vec<String>,
    seeds: Vec<u64>,
    inputs: Vec<FileDigest>,
    outputs: Vec<(PathBuf, String)>,
}

impl Run {
    pub fn new(argv: Vec<String>) -> Self {
        Self {
            started: Instant::now(),
            argv,
            seeds: Vec::new(),
            inputs: Vec::new(),
            outputs: Vec::new(),
        }
    }

    pub fn seed(&mut self, seed: u64) {
        self.seeds.push(seed);
    }

    pub fn read(&mut self, path: &Path) -> Result<String> {
        let bytes = fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
        self.inputs.push(FileDigest {
            path: path.display().to_string(),
            sha256: sha256_hex(&bytes),
        });
        String::from_utf8(bytes).with_context(|| format!("{} is not UTF-8", path.display()))
    }

    pub fn write(&mut self, path: &Path, contents: &str) -> Result<()> {
        fs::write(path, contents).with_context(|| format!("cannot write {}", path.display()))?;
        self.outputs
            .push((path.to_path_buf(), sha256_hex(contents.as_bytes())));
        Ok(())
    }

    /// Writes `<first output>.manifest.json` if anything was written.
    pub fn finish(self) -> Result<()> {
        let Some((first, _)) = self.outputs.first() else {
            return Ok(());
        };
        let mut name = first.as_os_str().to_owned();
        name.push(".manifest.json");
        let target = PathBuf::from(name);
        let manifest = RunManifest {
            tool: "tightcycle",
            version: env!("CARGO_PKG_VERSION"),
            format: FORMAT_VERSION,
            command: &self.argv,
            seeds: &self.seeds,
            inputs: self.inputs,
            outputs: self
                .outputs
                .iter()
                .map(|(p, d)| FileDigest {
                    path: p.display().to_string(),
                    sha256: d.clone(),
                })
                .collect(),
            wall_time_secs: self.started.elapsed().as_secs_f64(),
        };
        let json = serde_json::to_string_pretty(&manifest)? + "\n";
        fs::write(&target, json).with_context(|| format!("cannot write {}", target.display()))
    }
}
