//! Optional on-disk cache of rendered outputs, keyed by the canonical
//! command line. Enabled by setting `BUNDLECALC_CACHE_DIR`.

use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

pub const ENV_VAR: &str = "BUNDLECALC_CACHE_DIR";

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn from_env() -> Option<Self> {
        std::env::var_os(ENV_VAR).filter(|v| !v.is_empty()).map(|d| Cache { dir: PathBuf::from(d) })
    }

    pub fn at(dir: &Path) -> Self {
        Cache { dir: dir.to_path_buf() }
    }

    fn path(&self, key: &str) -> PathBuf {
        let digest = Sha256::digest(key.as_bytes());
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        self.dir.join(format!("{hex}.out"))
    }

    pub fn get(&self, key: &str) -> Option<String> {
        std::fs::read_to_string(self.path(key)).ok()
    }

    /// Best effort: failures to write are ignored.
    pub fn put(&self, key: &str, value: &str) {
        if std::fs::create_dir_all(&self.dir).is_ok() {
            let _ = std::fs::write(self.path(key), value);
        }
    }
}
