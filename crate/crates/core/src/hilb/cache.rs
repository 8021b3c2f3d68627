use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::sync::RwLock;

use serde::{Deserialize, Serialize};

use super::hilb_classes;
use crate::error::{Error, Result};
use crate::lpoly::LPoly;

/// Bump whenever the on-disk layout or the class computation changes;
/// files carrying any other version are ignored and rebuilt.
pub const CACHE_VERSION: &str = "hilbtail-classes/1";

/// `[Hilb^n(P^2)]` for `n = 0..=max_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbCache {
    version: String,
    classes: Vec<LPoly>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: String,
    classes: BTreeMap<usize, LPoly>,
}

impl HilbCache {
    pub fn compute(max_n: usize) -> Self {
        HilbCache {
            version: CACHE_VERSION.to_string(),
            classes: hilb_classes(max_n),
        }
    }

    pub fn version(&self) -> &str {
        &self.version
    }

    pub fn max_n(&self) -> usize {
        self.classes.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<&LPoly> {
        self.classes.get(n)
    }

    pub fn classes(&self) -> &[LPoly] {
        &self.classes
    }

    pub fn to_json(&self) -> Result<String> {
        let file = CacheFile {
            version: self.version.clone(),
            classes: self.classes.iter().cloned().enumerate().collect(),
        };
        Ok(serde_json::to_string(&file)?)
    }

    /// Parses a cache file. The indices must be exactly `0..=max_n`.
    pub fn from_json(s: &str) -> Result<Self> {
        let file: CacheFile = serde_json::from_str(s)?;
        if file.classes.is_empty() {
            return Err(Error::Malformed("cache holds no classes".into()));
        }
        if let Some((pos, &n)) = file.classes.keys().enumerate().find(|(i, n)| i != *n) {
            return Err(Error::Malformed(format!(
                "cache indices not contiguous: expected {pos}, found {n}"
            )));
        }
        Ok(HilbCache {
            version: file.version,
            classes: file.classes.into_values().collect(),
        })
    }

    /// Reads a cache file; a missing file or a stale version yields `None`.
    pub fn load(path: &Path) -> Result<Option<Self>> {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
            Err(source) => {
                return Err(Error::CacheIo {
                    path: path.to_path_buf(),
                    source,
                })
            }
        };
        let cache = Self::from_json(&text)?;
        Ok((cache.version == CACHE_VERSION).then_some(cache))
    }

    /// Writes through a temporary file in the same directory and renames it
    /// over `path`, so readers never observe a partial file.
    pub fn save(&self, path: &Path) -> Result<()> {
        let io_err = |source| Error::CacheIo {
            path: path.to_path_buf(),
            source,
        };
        let dir = path
            .parent()
            .filter(|d| !d.as_os_str().is_empty())
            .unwrap_or(Path::new("."));
        fs::create_dir_all(dir).map_err(io_err)?;
        let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
        tmp.write_all(self.to_json()?.as_bytes()).map_err(io_err)?;
        tmp.persist(path).map_err(|e| io_err(e.error))?;
        Ok(())
    }
}

/// Shared, optionally persistent, class store. Reads run concurrently;
/// extending the cache takes the write lock.
#[derive(Debug)]
pub struct HilbStore {
    path: Option<PathBuf>,
    inner: RwLock<Option<HilbCache>>,
}

impl HilbStore {
    pub fn in_memory() -> Self {
        HilbStore {
            path: None,
            inner: RwLock::new(None),
        }
    }

    pub fn open(path: impl Into<PathBuf>) -> Result<Self> {
        let path = path.into();
        let cache = HilbCache::load(&path)?;
        Ok(HilbStore {
            path: Some(path),
            inner: RwLock::new(cache),
        })
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn max_n(&self) -> Option<usize> {
        self.inner.read().unwrap().as_ref().map(HilbCache::max_n)
    }

    /// Cached class only; never computes.
    pub fn cached(&self, n: usize) -> Option<LPoly> {
        self.inner.read().unwrap().as_ref()?.get(n).cloned()
    }

    /// `[Hilb^n(P^2)]`, computing and persisting a larger expansion if needed.
    pub fn class(&self, n: usize) -> Result<LPoly> {
        self.ensure(n)?;
        Ok(self.cached(n).expect("ensure covers n"))
    }

    /// Makes sure classes `0..=max_n` are available.
    pub fn ensure(&self, max_n: usize) -> Result<()> {
        if self.max_n().is_some_and(|m| m >= max_n) {
            return Ok(());
        }
        let mut guard = self.inner.write().unwrap();
        if guard.as_ref().is_some_and(|c| c.max_n() >= max_n) {
            return Ok(());
        }
        // Another process may have written a larger cache meanwhile.
        if let Some(path) = &self.path {
            if let Some(disk) = HilbCache::load(path)? {
                if disk.max_n() >= max_n {
                    *guard = Some(disk);
                    return Ok(());
                }
            }
        }
        let fresh = HilbCache::compute(max_n);
        if let Some(path) = &self.path {
            fresh.save(path)?;
        }
        *guard = Some(fresh);
        Ok(())
    }

    /// Drops the in-memory copy and removes the file, if any.
    pub fn clear(&self) -> Result<()> {
        *self.inner.write().unwrap() = None;
        if let Some(path) = &self.path {
            match fs::remove_file(path) {
                Ok(()) => {}
                Err(e) if e.kind() == io::ErrorKind::NotFound => {}
                Err(source) => {
                    return Err(Error::CacheIo {
                        path: path.clone(),
                        source,
                    })
                }
            }
        }
        Ok(())
    }
}
