//! Output cache keyed by the inputs of a run.

use std::path::PathBuf;

use sha2::{Digest, Sha256};

use crate::{Cli, CACHE_ENV};

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn from_env() -> Option<Self> {
        let dir = std::env::var_os(CACHE_ENV).filter(|d| !d.is_empty())?;
        Some(Cache { dir: dir.into() })
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.out"))
    }

    pub fn get(&self, key: &str) -> Option<String> {
        std::fs::read_to_string(self.path(key)).ok()
    }

    /// Best effort: a cache that cannot be written is skipped.
    pub fn put(&self, key: &str, text: &str) {
        let res = std::fs::create_dir_all(&self.dir).and_then(|_| {
            let tmp = self.dir.join(format!("{key}.tmp{}", std::process::id()));
            std::fs::write(&tmp, text)?;
            std::fs::rename(&tmp, self.path(key))
        });
        if let Err(e) = res {
            eprintln!("alia: not caching in {}: {e}", self.dir.display());
        }
    }
}

/// Hash of the version, the configuration text and every parameter.
pub fn key(cli: &Cli, config_text: &str) -> String {
    let mut h = Sha256::new();
    let fields = [
        env!("CARGO_PKG_VERSION").to_string(),
        format!("{:?}", cli.command),
        format!("{:?}", cli.format),
        format!("{:?}", cli.point),
        format!("{:?}", cli.m),
        format!("{:?}", cli.degree),
        format!("{:?}", cli.nmax),
        config_text.to_string(),
    ];
    for f in fields {
        h.update(f.as_bytes());
        h.update([0u8]);
    }
    hex::encode(h.finalize())
}
