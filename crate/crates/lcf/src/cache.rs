//! Append-only JSONL result cache under `LCF_CACHE_DIR`.

use std::fs::{self, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const CACHE_ENV: &str = "LCF_CACHE_DIR";
const FILE: &str = "results.jsonl";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub key: String,
    pub version: String,
    pub exit_code: i32,
    pub output: String,
}

pub struct Cache {
    path: PathBuf,
}

/// `sha256(command, args, crate version)` as hex. The version is part of the
/// key, so entries from older builds are never hit.
pub fn key(command: &str, args: &serde_json::Value) -> String {
    let doc = serde_json::json!({ "command": command, "args": args, "version": env!("CARGO_PKG_VERSION") });
    hex::encode(Sha256::digest(doc.to_string().as_bytes()))
}

impl Cache {
    pub fn open(dir: &Path) -> Result<Cache> {
        fs::create_dir_all(dir).with_context(|| format!("creating cache directory {}", dir.display()))?;
        Ok(Cache { path: dir.join(FILE) })
    }

    pub fn from_env() -> Result<Option<Cache>> {
        match std::env::var_os(CACHE_ENV) {
            Some(d) if !d.is_empty() => Cache::open(Path::new(&d)).map(Some),
            _ => Ok(None),
        }
    }

    /// Last entry stored under `key`. Unreadable lines are skipped.
    pub fn get(&self, key: &str) -> Result<Option<Entry>> {
        let file = match fs::File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e).context("reading cache"),
        };
        let mut hit = None;
        for line in BufReader::new(file).lines() {
            let line = line?;
            if let Ok(e) = serde_json::from_str::<Entry>(&line) {
                if e.key == key && e.version == env!("CARGO_PKG_VERSION") {
                    hit = Some(e);
                }
            }
        }
        Ok(hit)
    }

    pub fn put(&self, key: &str, exit_code: i32, output: &str) -> Result<()> {
        let e = Entry {
            key: key.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            exit_code,
            output: output.to_string(),
        };
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path).context("opening cache")?;
        writeln!(f, "{}", serde_json::to_string(&e)?)?;
        Ok(())
    }
}
