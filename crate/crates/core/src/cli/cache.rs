//! On-disk cache of rendered JSON documents.
//!
//! Keys are the SHA-256 of `(command, canonical parameters, tool version)`.
//! Entries are written to a temporary file in the same directory and renamed
//! into place, so a reader sees either the whole entry or nothing.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use indexmap::IndexMap;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub const CACHE_DIR_ENV: &str = "GRIDCYCLES_CACHE_DIR";

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)
            .map_err(|e| Error::Cache(format!("cannot create {}: {e}", dir.display())))?;
        Ok(Cache { dir })
    }

    /// The directory from `explicit`, else from the environment, else none.
    pub fn from_flag_or_env(explicit: Option<&Path>) -> Result<Option<Self>> {
        match explicit {
            Some(dir) => Cache::new(dir).map(Some),
            None => match std::env::var_os(CACHE_DIR_ENV) {
                Some(dir) if !dir.is_empty() => Cache::new(PathBuf::from(dir)).map(Some),
                _ => Ok(None),
            },
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(command: &str, params: &IndexMap<String, Value>, version: &str) -> String {
        let canonical =
            serde_json::to_string(&(command, params, version)).expect("params serialise");
        hex::encode(Sha256::digest(canonical.as_bytes()))
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn get(&self, key: &str) -> Result<Option<String>> {
        match fs::read_to_string(self.path(key)) {
            Ok(text) => Ok(Some(text)),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(Error::Cache(format!("reading entry {key}: {e}"))),
        }
    }

    pub fn put(&self, key: &str, text: &str) -> Result<()> {
        let tmp = self.dir.join(format!(".{key}.{}.tmp", std::process::id()));
        let write = || -> std::io::Result<()> {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(text.as_bytes())?;
            f.sync_all()?;
            fs::rename(&tmp, self.path(key))
        };
        write().map_err(|e| {
            let _ = fs::remove_file(&tmp);
            Error::Cache(format!("writing entry {key}: {e}"))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_depend_on_every_part() {
        let mut p = IndexMap::new();
        p.insert("n".to_string(), Value::from(5));
        let a = Cache::key("count", &p, "0.1.0");
        assert_eq!(a.len(), 64);
        assert_eq!(a, Cache::key("count", &p, "0.1.0"));
        assert_ne!(a, Cache::key("sequence", &p, "0.1.0"));
        assert_ne!(a, Cache::key("count", &p, "0.1.1"));
        p.insert("n".to_string(), Value::from(6));
        assert_ne!(a, Cache::key("count", &p, "0.1.0"));
    }

    #[test]
    fn put_then_get() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path().join("nested")).unwrap();
        assert_eq!(cache.get("abc").unwrap(), None);
        cache.put("abc", "{\"x\": 1}\n").unwrap();
        assert_eq!(cache.get("abc").unwrap().as_deref(), Some("{\"x\": 1}\n"));
        let leftovers: Vec<_> = fs::read_dir(cache.dir())
            .unwrap()
            .filter_map(|e| e.ok())
            .filter(|e| e.file_name().to_string_lossy().ends_with(".tmp"))
            .collect();
        assert!(leftovers.is_empty());
    }
}
