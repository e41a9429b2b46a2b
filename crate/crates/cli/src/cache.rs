//! On-disk memo of projective flags, keyed by shape and weight.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use supero_core::{VermaFlag, Weight};

pub const CACHE_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheFile {
    pub version: u32,
    pub entries: BTreeMap<String, VermaFlag>,
}

impl Default for CacheFile {
    fn default() -> Self {
        Self {
            version: CACHE_VERSION,
            entries: BTreeMap::new(),
        }
    }
}

pub fn key(lam: &Weight) -> String {
    format!("{}:{}", lam.shape(), lam)
}

#[derive(Debug)]
pub struct Cache {
    path: PathBuf,
    file: CacheFile,
    dirty: bool,
}

impl Cache {
    /// Missing file or other version: start empty. Unreadable: warn, start empty.
    pub fn open(path: &Path) -> Self {
        let file = match std::fs::read_to_string(path) {
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => CacheFile::default(),
            Err(e) => {
                eprintln!(
                    "warning: cannot read cache {}: {e}; recomputing",
                    path.display()
                );
                CacheFile::default()
            }
            Ok(text) => match serde_json::from_str::<CacheFile>(&text) {
                Ok(f) if f.version == CACHE_VERSION => f,
                Ok(_) => CacheFile::default(),
                Err(e) => {
                    eprintln!(
                        "warning: corrupt cache {}: {e}; recomputing",
                        path.display()
                    );
                    CacheFile::default()
                }
            },
        };
        Self {
            path: path.to_path_buf(),
            file,
            dirty: false,
        }
    }

    pub fn get(&self, lam: &Weight) -> Option<&VermaFlag> {
        self.file
            .entries
            .get(&key(lam))
            .filter(|f| f.shape() == lam.shape())
    }

    pub fn insert(&mut self, lam: &Weight, flag: &VermaFlag) {
        let old = self.file.entries.insert(key(lam), flag.clone());
        self.dirty |= old.as_ref() != Some(flag);
    }

    /// Writes to a temporary file beside the target, then renames over it.
    pub fn save(&self) -> std::io::Result<()> {
        if !self.dirty {
            return Ok(());
        }
        let dir = match self.path.parent() {
            Some(p) if !p.as_os_str().is_empty() => p,
            _ => Path::new("."),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        serde_json::to_writer_pretty(&mut tmp, &self.file)?;
        tmp.write_all(b"\n")?;
        tmp.as_file().sync_all()?;
        tmp.persist(&self.path).map_err(|e| e.error)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_version() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.json");
        let lam: Weight = "5,3,1|1".parse().unwrap();
        let flag = VermaFlag::singleton(&lam);
        let mut c = Cache::open(&path);
        assert!(c.get(&lam).is_none());
        c.insert(&lam, &flag);
        c.save().unwrap();
        assert_eq!(Cache::open(&path).get(&lam), Some(&flag));

        let text = std::fs::read_to_string(&path).unwrap();
        let parsed: CacheFile = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed.entries.len(), 1);

        let stale = text.replace("\"version\": 1", "\"version\": 0");
        std::fs::write(&path, stale).unwrap();
        assert!(Cache::open(&path).get(&lam).is_none());

        std::fs::write(&path, "{not json").unwrap();
        assert!(Cache::open(&path).get(&lam).is_none());
    }
}
