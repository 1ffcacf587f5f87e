//! On-disk cache of character tables, enabled by `HOOKDEC_CACHE_DIR`.
//!
//! One JSON file per degree, `chartable-v1-n{n}.json`:
//!
//! ```text
//! {"format":"hookdec-chartable","version":1,"n":4,"checksum":"<sha256 hex>",
//!  "partitions":["4","3,1",...],"values":[[1,1,1,1,1],...]}
//! ```
//!
//! The checksum is the SHA-256 of the compact JSON encoding of
//! `[n, partitions, values]`. A file that fails to parse, has the wrong
//! checksum, or lists partitions out of order is ignored and recomputed.

use std::collections::BTreeSet;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use hookdec::characters::{cached_tables, install_table, CharacterTable};
use hookdec::partition::enumerate_partitions;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const ENV_VAR: &str = "HOOKDEC_CACHE_DIR";
const FORMAT: &str = "hookdec-chartable";
const VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format: String,
    version: u32,
    n: usize,
    checksum: String,
    partitions: Vec<String>,
    values: Vec<Vec<i64>>,
}

fn checksum(n: usize, partitions: &[String], values: &[Vec<i64>]) -> String {
    let payload = serde_json::to_vec(&(n, partitions, values)).expect("payload serializes");
    hex::encode(Sha256::digest(payload))
}

pub fn file_name(n: usize) -> String {
    format!("chartable-v{VERSION}-n{n}.json")
}

pub struct TableCache {
    dir: PathBuf,
    loaded: BTreeSet<usize>,
}

impl TableCache {
    /// Opens the cache named by `HOOKDEC_CACHE_DIR`, if set.
    pub fn from_env() -> Option<Self> {
        let dir = std::env::var_os(ENV_VAR)?;
        Some(Self::open(PathBuf::from(dir)))
    }

    /// Installs every valid table found in `dir`.
    pub fn open(dir: PathBuf) -> Self {
        let mut loaded = BTreeSet::new();
        // Degrees beyond 20 would never be computed anyway.
        for n in 0..=20 {
            if let Some(table) = read_table(&dir.join(file_name(n)), n) {
                install_table(table);
                loaded.insert(n);
            }
        }
        TableCache { dir, loaded }
    }

    /// Writes out every table computed during this run that was not loaded
    /// from disk.
    pub fn persist(&self) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        for table in cached_tables() {
            if !self.loaded.contains(&table.degree()) {
                write_table(&self.dir, &table)?;
            }
        }
        Ok(())
    }
}

fn read_table(path: &Path, n: usize) -> Option<CharacterTable> {
    let text = fs::read_to_string(path).ok()?;
    let file: CacheFile = serde_json::from_str(&text).ok()?;
    if file.format != FORMAT || file.version != VERSION || file.n != n {
        return None;
    }
    if checksum(file.n, &file.partitions, &file.values) != file.checksum {
        return None;
    }
    let expected: Vec<String> = enumerate_partitions(n, None).iter().map(ToString::to_string).collect();
    if file.partitions != expected {
        return None;
    }
    CharacterTable::from_values(n, file.values).ok()
}

fn write_table(dir: &Path, table: &CharacterTable) -> io::Result<()> {
    let n = table.degree();
    let partitions: Vec<String> = table.partitions().iter().map(ToString::to_string).collect();
    let values = table.values();
    let file = CacheFile {
        format: FORMAT.to_owned(),
        version: VERSION,
        n,
        checksum: checksum(n, &partitions, &values),
        partitions,
        values,
    };
    let text = serde_json::to_string(&file).expect("cache file serializes");
    // Write then rename so a concurrent reader never sees a partial file.
    let target = dir.join(file_name(n));
    let partial = dir.join(format!("{}.{}.tmp", file_name(n), std::process::id()));
    fs::write(&partial, text)?;
    fs::rename(&partial, &target)
}
