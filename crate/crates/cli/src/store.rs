//! Where the computation cache lives and how it is read and written.
//!
//! The cache only holds derived data, so a missing, stale or unreadable file
//! is reported on stderr and otherwise ignored.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use witt_forge::cache::{self, CacheFile};

pub const ENV_VAR: &str = "WITT_FORGE_CACHE";

/// `--cache-path`, then `$WITT_FORGE_CACHE`, then the user cache directory.
pub fn resolve(flag: Option<&Path>) -> Option<PathBuf> {
    if let Some(p) = flag {
        return Some(p.to_path_buf());
    }
    if let Some(p) = std::env::var_os(ENV_VAR).filter(|v| !v.is_empty()) {
        return Some(PathBuf::from(p));
    }
    dirs::cache_dir().map(|d| d.join("witt-forge").join("cache.json"))
}

/// Loads the file into the in-memory caches. Returns whether anything was
/// loaded.
pub fn load(path: &Path) -> bool {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return false,
        Err(e) => {
            eprintln!("warning: ignoring cache {}: {e}", path.display());
            return false;
        }
    };
    let parsed: Result<CacheFile, String> = serde_json::from_str(&text).map_err(|e| e.to_string());
    match parsed.and_then(|file| cache::load(&file).map_err(|e| e.to_string())) {
        Ok(()) => true,
        Err(e) => {
            eprintln!("warning: ignoring cache {}: {e}", path.display());
            false
        }
    }
}

/// Writes the current in-memory caches, replacing the file atomically.
pub fn save(path: &Path, degree_bound: usize) -> io::Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    let file = cache::snapshot(degree_bound);
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, serde_json::to_vec(&file)?)?;
    fs::rename(&tmp, path)
}
