//! On-disk cache of descent-class matrices, one `adjp-<tag>.json` per group.

use std::fs::{self, File, OpenOptions};
use std::io::{ErrorKind, Write};
use std::path::{Path, PathBuf};
use std::thread;
use std::time::{Duration, SystemTime};

use anyhow::{Context, Result};
use garside::spectra::DescentClassMatrix;
use garside::Error;

const LOCK_RETRIES: u32 = 600;
const LOCK_POLL: Duration = Duration::from_millis(100);
/// A lock older than this is assumed to belong to a dead process.
const LOCK_STALE: Duration = Duration::from_secs(600);

pub struct Cache {
    dir: PathBuf,
}

/// `GARSIDE_CACHE_DIR`, else `$XDG_CACHE_HOME/garside`, else
/// `$HOME/.cache/garside`.
pub fn default_dir() -> Option<PathBuf> {
    let var = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty()).map(PathBuf::from);
    var("GARSIDE_CACHE_DIR")
        .or_else(|| var("XDG_CACHE_HOME").map(|d| d.join("garside")))
        .or_else(|| var("HOME").map(|d| d.join(".cache").join("garside")))
}

impl Cache {
    pub fn new(dir: PathBuf) -> Self {
        Self { dir }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, tag: &str) -> PathBuf {
        self.dir.join(format!("adjp-{tag}.json"))
    }

    /// A cached matrix, or `None` on a miss. Unreadable entries count as
    /// misses and get rewritten.
    pub fn load(&self, tag: &str) -> Option<DescentClassMatrix> {
        let text = fs::read_to_string(self.path(tag)).ok()?;
        match serde_json::from_str(&text) {
            Ok(m) => Some(m),
            Err(e) => {
                eprintln!("warning: ignoring corrupt cache entry for {tag}: {e}");
                None
            }
        }
    }

    /// Cached value or `compute()`, storing the result on a miss.
    pub fn get_or_compute(
        &self,
        tag: &str,
        compute: impl FnOnce() -> Result<DescentClassMatrix>,
    ) -> Result<DescentClassMatrix> {
        if let Some(m) = self.load(tag) {
            return Ok(m);
        }
        fs::create_dir_all(&self.dir).with_context(|| format!("creating {}", self.dir.display()))?;
        let _lock = Lock::acquire(&self.dir.join(format!("adjp-{tag}.lock")))?;
        // another process may have filled it while we waited
        if let Some(m) = self.load(tag) {
            return Ok(m);
        }
        let m = compute()?;
        self.store(tag, &m)?;
        Ok(m)
    }

    fn store(&self, tag: &str, m: &DescentClassMatrix) -> Result<()> {
        let target = self.path(tag);
        let tmp = self.dir.join(format!(".adjp-{tag}.{}.tmp", std::process::id()));
        let mut f = File::create(&tmp).with_context(|| format!("creating {}", tmp.display()))?;
        serde_json::to_writer(&mut f, m)?;
        f.write_all(b"\n")?;
        f.sync_all()?;
        fs::rename(&tmp, &target).with_context(|| format!("renaming into {}", target.display()))?;
        Ok(())
    }

    /// Cached entries as `(tag, bytes)`, sorted by tag.
    pub fn list(&self) -> Result<Vec<(String, u64)>> {
        let mut out = Vec::new();
        let entries = match fs::read_dir(&self.dir) {
            Ok(e) => e,
            Err(e) if e.kind() == ErrorKind::NotFound => return Ok(out),
            Err(e) => return Err(e).with_context(|| format!("reading {}", self.dir.display())),
        };
        for entry in entries {
            let entry = entry?;
            let name = entry.file_name().to_string_lossy().into_owned();
            if let Some(tag) = name.strip_prefix("adjp-").and_then(|s| s.strip_suffix(".json")) {
                out.push((tag.to_string(), entry.metadata()?.len()));
            }
        }
        out.sort();
        Ok(out)
    }

    /// Removes every entry; returns the removed tags.
    pub fn clear(&self) -> Result<Vec<String>> {
        let tags = self.list()?;
        for (tag, _) in &tags {
            fs::remove_file(self.path(tag))?;
        }
        Ok(tags.into_iter().map(|(t, _)| t).collect())
    }
}

struct Lock {
    path: PathBuf,
}

impl Lock {
    fn acquire(path: &Path) -> Result<Self> {
        for _ in 0..LOCK_RETRIES {
            match OpenOptions::new().write(true).create_new(true).open(path) {
                Ok(mut f) => {
                    let _ = writeln!(f, "{}", std::process::id());
                    return Ok(Self { path: path.to_path_buf() });
                }
                Err(e) if e.kind() == ErrorKind::AlreadyExists => {
                    if is_stale(path) {
                        let _ = fs::remove_file(path);
                        continue;
                    }
                    thread::sleep(LOCK_POLL);
                }
                Err(e) => return Err(e).with_context(|| format!("creating lock {}", path.display())),
            }
        }
        Err(Error::Cache(format!("timed out waiting for {}", path.display())).into())
    }
}

fn is_stale(path: &Path) -> bool {
    fs::metadata(path)
        .and_then(|m| m.modified())
        .ok()
        .and_then(|t| SystemTime::now().duration_since(t).ok())
        .is_some_and(|age| age > LOCK_STALE)
}

impl Drop for Lock {
    fn drop(&mut self) {
        let _ = fs::remove_file(&self.path);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use garside::typeb::TypeB;

    #[test]
    fn round_trip_and_clear() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path().join("c"));
        assert!(cache.list().unwrap().is_empty());
        let built = DescentClassMatrix::build(&TypeB::new(2)).unwrap();
        let first = cache.get_or_compute("B2", || Ok(built.clone())).unwrap();
        let second = cache.get_or_compute("B2", || panic!("should hit")).unwrap();
        assert_eq!(first, second);
        assert_eq!(cache.list().unwrap().len(), 1);
        assert_eq!(cache.clear().unwrap(), vec!["B2".to_string()]);
        assert!(cache.load("B2").is_none());
    }

    #[test]
    fn stale_lock_is_removed() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("x.lock");
        fs::write(&path, "1").unwrap();
        let old = SystemTime::now() - LOCK_STALE - Duration::from_secs(5);
        File::options().write(true).open(&path).unwrap().set_modified(old).unwrap();
        let lock = Lock::acquire(&path).unwrap();
        drop(lock);
        assert!(!path.exists());
    }
}
