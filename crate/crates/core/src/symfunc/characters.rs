//! Irreducible characters of the symmetric groups by the Murnaghan–Nakayama
//! rule, on beta-sets (abacus positions).
//!
//! `χ^λ(μ)` is the coefficient of `s_λ` in `ψ_μ`. Removing a border strip of
//! length `r` from `λ` is moving one bead from position `b` to an empty
//! position `b − r`; the sign is `(−1)` to the number of beads strictly
//! between. Results are memoized on `(λ, remaining cycle type)`.

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partition::{partitions_of, Partition};

type Key = (Partition, Partition);

static CHARACTERS: LazyLock<RwLock<HashMap<Key, BigInt>>> = LazyLock::new(|| RwLock::new(HashMap::new()));

/// `χ^λ(μ)`; zero when the weights differ.
pub fn character(lambda: &Partition, mu: &Partition) -> BigInt {
    if lambda.weight() != mu.weight() {
        return BigInt::zero();
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = CHARACTERS.read().unwrap().get(&key) {
        return v.clone();
    }
    let mut local = HashMap::new();
    let value = recurse(lambda, mu.parts(), &mut local);
    let mut global = CHARACTERS.write().unwrap();
    global.extend(local);
    value
}

/// The full character row `λ ↦ χ^λ(μ)` over partitions of `|μ|`, zeros omitted.
pub fn character_column(mu: &Partition) -> Vec<(Partition, BigInt)> {
    partitions_of(mu.weight())
        .into_iter()
        .filter_map(|lambda| {
            let v = character(&lambda, mu);
            (!v.is_zero()).then_some((lambda, v))
        })
        .collect()
}

fn recurse(lambda: &Partition, mu: &[usize], local: &mut HashMap<Key, BigInt>) -> BigInt {
    if mu.is_empty() {
        return if lambda.is_empty() { BigInt::one() } else { BigInt::zero() };
    }
    let key = (lambda.clone(), Partition::from_parts(mu.to_vec()).expect("suffix of a partition"));
    if let Some(v) = local.get(&key) {
        return v.clone();
    }
    if let Some(v) = CHARACTERS.read().unwrap().get(&key) {
        return v.clone();
    }
    let r = mu[0];
    let rest = &mu[1..];
    let mut total = BigInt::zero();
    for (smaller, negative) in remove_strips(lambda, r) {
        let v = recurse(&smaller, rest, local);
        if negative {
            total -= v;
        } else {
            total += v;
        }
    }
    local.insert(key, total.clone());
    total
}

/// All partitions obtained by removing a border strip of length `r`, with a
/// flag for odd height.
pub fn remove_strips(lambda: &Partition, r: usize) -> Vec<(Partition, bool)> {
    let len = lambda.len();
    // beta-set with `len` beads, decreasing
    let beads: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut out = Vec::new();
    for (idx, &b) in beads.iter().enumerate() {
        if b < r || beads.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beads.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beads.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved.iter().enumerate().map(|(i, &x)| x - (len - 1 - i)).collect();
        out.push((Partition::new(parts), between % 2 == 1));
    }
    out
}

pub(crate) fn snapshot() -> Vec<(Partition, Partition, BigInt)> {
    let map = CHARACTERS.read().unwrap();
    let mut out: Vec<_> = map.iter().map(|((l, m), v)| (l.clone(), m.clone(), v.clone())).collect();
    out.sort();
    out
}

pub(crate) fn load(entries: impl IntoIterator<Item = (Partition, Partition, BigInt)>) {
    let mut map = CHARACTERS.write().unwrap();
    for (l, m, v) in entries {
        map.insert((l, m), v);
    }
}

pub(crate) fn clear() {
    CHARACTERS.write().unwrap().clear();
}
