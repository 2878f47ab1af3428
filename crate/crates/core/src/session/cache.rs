//! Content-addressed cache of reduced Gröbner bases.
//!
//! Each entry is a text file named by the SHA-256 of its key. The file
//! records the key, a checksum of the body and the basis, one polynomial
//! per line. Entries that fail the checksum are ignored and rewritten.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

const MAGIC: &str = "cofull-gb 1";

#[derive(Clone, Debug)]
pub struct GbCache {
    dir: PathBuf,
}

fn digest(s: &str) -> String {
    hex::encode(Sha256::digest(s.as_bytes()))
}

impl GbCache {
    pub fn new(dir: impl Into<PathBuf>) -> std::io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(GbCache { dir })
    }

    /// The directory named by `COFULL_CACHE_DIR`, if set.
    pub fn from_env() -> Option<std::io::Result<Self>> {
        std::env::var_os("COFULL_CACHE_DIR").map(GbCache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{}.gb", digest(key)))
    }

    /// The cached basis lines for `key`, or `None` on a miss or a corrupt entry.
    pub fn load(&self, key: &str) -> Option<Vec<String>> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let mut lines = text.lines();
        if lines.next()? != MAGIC {
            return None;
        }
        if lines.next()?.strip_prefix("key: ")? != key {
            return None;
        }
        let sum = lines.next()?.strip_prefix("sha256: ")?.to_string();
        let body: Vec<String> = lines.map(str::to_string).collect();
        if digest(&body.join("\n")) != sum {
            return None;
        }
        Some(body)
    }

    /// Write an entry atomically (temporary file, then rename).
    pub fn store(&self, key: &str, basis: &[String]) -> std::io::Result<()> {
        let body = basis.join("\n");
        let text = format!("{MAGIC}\nkey: {key}\nsha256: {}\n{body}", digest(&body));
        let target = self.path(key);
        let tmp = self.dir.join(format!(".{}.{}.tmp", digest(key), std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(text.as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &target)
    }

    /// A private staging cache under this one, for an isolated job.
    pub fn staging(&self, tag: &str) -> std::io::Result<GbCache> {
        GbCache::new(self.dir.join(format!(".stage-{tag}-{}", std::process::id())))
    }

    /// Move the entries of a staging cache into this one and remove it.
    pub fn merge_from(&self, other: &GbCache) -> std::io::Result<()> {
        for entry in fs::read_dir(&other.dir)? {
            let entry = entry?;
            let name = entry.file_name();
            if name.to_string_lossy().ends_with(".gb") {
                fs::rename(entry.path(), self.dir.join(name))?;
            }
        }
        fs::remove_dir_all(&other.dir)
    }
}
