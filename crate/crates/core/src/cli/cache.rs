//! On-disk cache of computed payloads, keyed by a description of the
//! computation and the code version, with a checksum on every entry.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Bumped whenever a cached payload changes meaning.
pub const SCHEMA: u32 = 1;

pub fn code_version() -> String {
    format!("{}+{SCHEMA}", env!("CARGO_PKG_VERSION"))
}

fn hex_digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Serialize, Deserialize)]
struct Entry {
    key: String,
    version: String,
    checksum: String,
    payload: String,
}

/// Outcome of a lookup.
#[derive(Debug, PartialEq, Eq)]
pub enum Lookup {
    Hit(String),
    Miss,
    /// The entry exists but fails its checksum or does not parse.
    Corrupt,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
    version: String,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache::with_version(dir, code_version())
    }

    pub fn with_version(dir: impl Into<PathBuf>, version: impl Into<String>) -> Self {
        Cache { dir: dir.into(), version: version.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        let name = hex_digest(format!("{}\n{key}", self.version).as_bytes());
        self.dir.join(format!("{}.json", &name[..32]))
    }

    pub fn get(&self, key: &str) -> Lookup {
        let Ok(text) = fs::read_to_string(self.path(key)) else { return Lookup::Miss };
        let Ok(entry) = serde_json::from_str::<Entry>(&text) else { return Lookup::Corrupt };
        if entry.key != key || entry.version != self.version {
            return Lookup::Miss;
        }
        if hex_digest(entry.payload.as_bytes()) != entry.checksum {
            return Lookup::Corrupt;
        }
        Lookup::Hit(entry.payload)
    }

    /// Writes through a temporary file renamed into place.
    pub fn put(&self, key: &str, payload: &str) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = Entry {
            key: key.to_string(),
            version: self.version.clone(),
            checksum: hex_digest(payload.as_bytes()),
            payload: payload.to_string(),
        };
        let target = self.path(key);
        let tmp = target.with_extension(format!("tmp.{}", std::process::id()));
        fs::write(&tmp, serde_json::to_string(&entry)?)?;
        fs::rename(&tmp, &target)
    }

    /// Cached payload for `key`, or the result of `compute` stored under it.
    /// Corrupt entries are reported through `warn` and replaced.
    pub fn get_or_compute<E>(
        &self,
        key: &str,
        warn: &mut dyn FnMut(String),
        compute: impl FnOnce() -> Result<String, E>,
    ) -> Result<String, E> {
        match self.get(key) {
            Lookup::Hit(p) => return Ok(p),
            Lookup::Corrupt => warn(format!("cache entry for {key} is corrupted; recomputing")),
            Lookup::Miss => {}
        }
        let payload = compute()?;
        if let Err(e) = self.put(key, &payload) {
            warn(format!("could not write cache entry for {key}: {e}"));
        }
        Ok(payload)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_version_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        assert_eq!(cache.get("k"), Lookup::Miss);
        cache.put("k", "payload").unwrap();
        assert_eq!(cache.get("k"), Lookup::Hit("payload".into()));
        assert_eq!(Cache::with_version(dir.path(), "other").get("k"), Lookup::Miss);

        let path = cache.path("k");
        let text = fs::read_to_string(&path).unwrap().replace("payload", "paylaod");
        fs::write(&path, text).unwrap();
        assert_eq!(cache.get("k"), Lookup::Corrupt);
        let mut warnings = Vec::new();
        let got = cache.get_or_compute::<()>("k", &mut |w| warnings.push(w), || Ok("payload".into())).unwrap();
        assert_eq!(got, "payload");
        assert_eq!(warnings.len(), 1);
        assert_eq!(cache.get("k"), Lookup::Hit("payload".into()));

        fs::write(&path, "not json").unwrap();
        assert_eq!(cache.get("k"), Lookup::Corrupt);
        let leftovers: Vec<_> = fs::read_dir(dir.path()).unwrap().filter_map(|e| e.ok()).filter(|e| e.path().to_string_lossy().contains(".tmp.")).collect();
        assert!(leftovers.is_empty());
    }
}
