//! Persistence of memoized character values and basis rows.
//!
//! The cache is derived data only: loading it saves time, clearing it never
//! changes a result.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::parse_q;
use crate::symfunc::{characters, convert, BasisTag};

pub const CACHE_FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterEntry {
    pub lambda: Partition,
    pub mu: Partition,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowEntry {
    pub basis: BasisTag,
    pub mu: Partition,
    pub coeffs: Vec<(Partition, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheFile {
    pub version: u32,
    pub degree_bound: usize,
    pub characters: Vec<CharacterEntry>,
    pub rows: Vec<RowEntry>,
}

/// Captures the current in-memory caches.
pub fn snapshot(degree_bound: usize) -> CacheFile {
    let characters = characters::snapshot()
        .into_iter()
        .map(|(lambda, mu, v)| CharacterEntry { lambda, mu, value: v.to_string() })
        .collect();
    let rows = convert::snapshot_rows()
        .into_iter()
        .map(|(basis, mu, row)| RowEntry {
            basis,
            mu,
            coeffs: row.into_iter().map(|(l, c)| (l, c.to_string())).collect(),
        })
        .collect();
    CacheFile { version: CACHE_FORMAT_VERSION, degree_bound, characters, rows }
}

/// Loads a cache file into memory. Files of another format version are
/// rejected so the caller can discard them.
pub fn load(file: &CacheFile) -> Result<()> {
    if file.version != CACHE_FORMAT_VERSION {
        return Err(Error::Parse(format!("cache format version {} is not {CACHE_FORMAT_VERSION}", file.version)));
    }
    let chars = file
        .characters
        .iter()
        .map(|e| {
            let v: BigInt = e.value.parse().map_err(|_| Error::Parse(format!("bad cached character {:?}", e.value)))?;
            Ok((e.lambda.clone(), e.mu.clone(), v))
        })
        .collect::<Result<Vec<_>>>()?;
    let rows = file
        .rows
        .iter()
        .map(|r| {
            let coeffs = r.coeffs.iter().map(|(l, c)| Ok((l.clone(), parse_q(c)?))).collect::<Result<Vec<_>>>()?;
            Ok((r.basis, r.mu.clone(), coeffs))
        })
        .collect::<Result<Vec<_>>>()?;
    characters::load(chars);
    convert::load_rows(rows);
    Ok(())
}

/// Empties every in-memory cache.
pub fn clear() {
    characters::clear();
    convert::clear();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{is_schur_positive, SymFunc};

    #[test]
    fn snapshot_round_trips_through_json() {
        let f = SymFunc::theta(5, 12).unwrap();
        let before = is_schur_positive(&f);
        let snap = snapshot(12);
        assert!(!snap.characters.is_empty());
        let text = serde_json::to_string(&snap).unwrap();
        let back: CacheFile = serde_json::from_str(&text).unwrap();
        load(&back).unwrap();
        assert_eq!(is_schur_positive(&f), before);
    }

    #[test]
    fn wrong_version_is_rejected() {
        let mut snap = snapshot(12);
        snap.version = 99;
        assert!(load(&snap).is_err());
    }
}
