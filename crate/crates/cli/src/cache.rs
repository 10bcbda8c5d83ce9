//! On-disk cache of computed series, one JSON file per key.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use wreathcoh::cohomology::{space_series, SpaceKind};
use wreathcoh::json::{from_json, to_json};
use wreathcoh::{Result, WreathSeries, ENGINE_VERSION};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheKey {
    pub r: u32,
    pub kind: SpaceKind,
    pub truncation: usize,
    pub version: &'static str,
}

impl CacheKey {
    pub fn new(r: u32, kind: SpaceKind, truncation: usize) -> Self {
        CacheKey { r, kind, truncation, version: ENGINE_VERSION }
    }

    pub fn file_name(&self) -> String {
        format!("{}-r{}-n{}-v{}.json", self.kind, self.r, self.truncation, self.version)
    }
}

pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Cache { dir }
    }

    /// The series for `key`, read from disk when a valid entry exists and
    /// computed (then stored) otherwise. Unreadable entries are recomputed.
    pub fn series(&self, key: &CacheKey) -> Result<WreathSeries> {
        let Some(dir) = &self.dir else {
            return space_series(key.r, key.kind, key.truncation);
        };
        let path = dir.join(key.file_name());
        if let Some(hit) = read_entry(&path, key) {
            return Ok(hit);
        }
        let series = space_series(key.r, key.kind, key.truncation)?;
        if let Err(err) = write_entry(dir, &path, &series) {
            eprintln!("warning: could not write cache entry {}: {err}", path.display());
        }
        Ok(series)
    }
}

fn read_entry(path: &Path, key: &CacheKey) -> Option<WreathSeries> {
    let text = fs::read_to_string(path).ok()?;
    let series = from_json(&text).ok()?;
    (series.r() == key.r && series.truncation() == key.truncation).then_some(series)
}

fn write_entry(dir: &Path, path: &Path, series: &WreathSeries) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, to_json(series))?;
    fs::rename(&tmp, path)
}
