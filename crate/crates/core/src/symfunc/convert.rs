//! Passage between the power-sum basis and the other five bases.
//!
//! Building a basis element (`from_basis`) and extracting coefficients
//! (`to_basis_coeffs`) go through independent formulas wherever possible, so
//! that a round trip is a genuine check:
//!
//! | basis | element in `ψ` | coefficients of `ψ_μ` |
//! |-------|----------------|------------------------|
//! | h | `Σ z_μ⁻¹ψ_μ` | Newton's identities |
//! | e | `Σ ε_μ z_μ⁻¹ψ_μ` | Newton's identities |
//! | w | `θ` recursion | `ψ_n = Σ_{d∣n} dθ_d^{n/d}` |
//! | s | Jacobi–Trudi | Murnaghan–Nakayama |
//! | m | `Σ_μ ⟨m_λ, ψ_μ⟩ z_μ⁻¹ ψ_μ` with `⟨m_λ, ψ_μ⟩ = [h_λ]ψ_μ` | Hall pairing with `h_λ` |

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{characters, insert_term, BasisTag, SymFunc, Terms};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::rational::{divisors, q, q_int, Q};

type Cache = LazyLock<RwLock<HashMap<(BasisTag, Partition), Arc<Terms>>>>;

/// `ψ`-expansions of basis elements.
static ELEMENTS: Cache = LazyLock::new(|| RwLock::new(HashMap::new()));
/// Basis coefficients of `ψ_μ`.
static ROWS: Cache = LazyLock::new(|| RwLock::new(HashMap::new()));
/// `ψ_n` as a polynomial in the generators `h`, `e` or `θ`.
static GENERATOR_FORMS: Cache = LazyLock::new(|| RwLock::new(HashMap::new()));

fn cached(cache: &Cache, key: (BasisTag, Partition), build: impl FnOnce() -> Terms) -> Arc<Terms> {
    if let Some(v) = cache.read().unwrap().get(&key) {
        return v.clone();
    }
    let value = Arc::new(build());
    cache.write().unwrap().entry(key).or_insert(value).clone()
}

pub(crate) fn mul_terms(a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    for (la, ca) in a {
        for (lb, cb) in b {
            insert_term(&mut out, la.union(lb), ca * cb);
        }
    }
    out
}

fn add_scaled(acc: &mut Terms, t: &Terms, c: &Q) {
    for (l, v) in t {
        insert_term(acc, l.clone(), v * c);
    }
}

fn unit() -> Terms {
    [(Partition::empty(), q(1))].into()
}

fn single(lambda: Partition) -> Terms {
    [(lambda, q(1))].into()
}

/// The basis element `b_λ` as a symmetric function.
pub fn from_basis(tag: BasisTag, lambda: &Partition, bound: usize) -> Result<SymFunc> {
    let degree = lambda.weight();
    if degree > bound {
        return Err(Error::Capacity { degree, bound });
    }
    let terms = element(tag, lambda);
    Ok(SymFunc::from_terms_unchecked(bound, (*terms).clone()))
}

/// Coefficients of `f` in the basis `tag`, zeros omitted.
pub fn to_basis_coeffs(tag: BasisTag, f: &SymFunc) -> Terms {
    let mut out = Terms::new();
    for (mu, c) in f.terms() {
        add_scaled(&mut out, &row(tag, mu), c);
    }
    out
}

/// Inverse of [`to_basis_coeffs`]: `Σ c_λ b_λ`.
pub fn from_basis_coeffs(
    tag: BasisTag,
    coeffs: impl IntoIterator<Item = (Partition, Q)>,
    bound: usize,
) -> Result<SymFunc> {
    let mut out = SymFunc::zero(bound);
    for (lambda, c) in coeffs {
        out = &out + &from_basis(tag, &lambda, bound)?.scale(&c);
    }
    Ok(out)
}

pub(crate) fn theta_element(d: usize, bound: usize) -> Result<SymFunc> {
    from_basis(BasisTag::W, &Partition::row(d), bound)
}

fn element(tag: BasisTag, lambda: &Partition) -> Arc<Terms> {
    cached(&ELEMENTS, (tag, lambda.clone()), || match tag {
        BasisTag::P => single(lambda.clone()),
        _ if lambda.is_empty() => unit(),
        BasisTag::H | BasisTag::E | BasisTag::W if lambda.len() > 1 => {
            lambda.parts().iter().fold(unit(), |acc, &n| mul_terms(&acc, &element(tag, &Partition::row(n))))
        }
        BasisTag::H => complete(lambda.weight()),
        BasisTag::E => elementary(lambda.weight()),
        BasisTag::W => theta(lambda.weight()),
        BasisTag::S => jacobi_trudi(lambda),
        BasisTag::M => monomial(lambda),
    })
}

fn complete(n: usize) -> Terms {
    partitions_of(n)
        .into_iter()
        .map(|mu| {
            let z = Q::new(BigInt::one(), mu.z_factor());
            (mu, z)
        })
        .collect()
}

fn elementary(n: usize) -> Terms {
    partitions_of(n)
        .into_iter()
        .map(|mu| {
            let mut z = Q::new(BigInt::one(), mu.z_factor());
            if (n - mu.len()) % 2 == 1 {
                z = -z;
            }
            (mu, z)
        })
        .collect()
}

/// `θ_n = (ψ_n − Σ_{d∣n, d<n} d θ_d^{n/d}) / n`.
fn theta(n: usize) -> Terms {
    let mut acc = single(Partition::row(n));
    for d in divisors(n).into_iter().filter(|&d| d < n) {
        let power = element(BasisTag::W, &Partition::from_parts(vec![d; n / d]).expect("constant parts"));
        add_scaled(&mut acc, &power, &q(-(d as i64)));
    }
    let inv = Q::new(BigInt::one(), BigInt::from(n));
    acc.into_iter().map(|(l, c)| (l, c * &inv)).collect()
}

/// Jacobi–Trudi, using whichever of the `h`- and `e`-determinants is smaller.
fn jacobi_trudi(lambda: &Partition) -> Terms {
    if lambda.is_empty() {
        return unit();
    }
    let (shape, gen) =
        if lambda.len() <= lambda.first() { (lambda.clone(), BasisTag::H) } else { (lambda.conjugate(), BasisTag::E) };
    let k = shape.len();
    let entry = |i: usize, j: usize| -> Option<Arc<Terms>> {
        let idx = shape.parts()[i] as isize - i as isize + j as isize;
        match idx {
            i if i < 0 => None,
            0 => Some(Arc::new(unit())),
            i => Some(element(gen, &Partition::row(i as usize))),
        }
    };
    // Laplace expansion along rows, memoized on the set of used columns.
    let mut memo: HashMap<u32, Terms> = HashMap::new();
    fn det(
        row: usize,
        used: u32,
        k: usize,
        entry: &dyn Fn(usize, usize) -> Option<Arc<Terms>>,
        memo: &mut HashMap<u32, Terms>,
    ) -> Terms {
        if row == k {
            return unit();
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut total = Terms::new();
        let mut position = 0;
        for col in 0..k {
            if used & (1 << col) != 0 {
                continue;
            }
            if let Some(a) = entry(row, col) {
                let minor = det(row + 1, used | (1 << col), k, entry, memo);
                if !minor.is_empty() {
                    let sign = if position % 2 == 0 { q(1) } else { q(-1) };
                    add_scaled(&mut total, &mul_terms(&a, &minor), &sign);
                }
            }
            position += 1;
        }
        memo.insert(used, total.clone());
        total
    }
    det(0, 0, k, &entry, &mut memo)
}

/// `m_λ = Σ_μ ⟨m_λ, ψ_μ⟩ ψ_μ / z_μ`, where the pairing is read off as the
/// `h_λ`-coefficient of `ψ_μ` since `m` and `h` are dual.
fn monomial(lambda: &Partition) -> Terms {
    let mut out = Terms::new();
    for mu in partitions_of(lambda.weight()) {
        let c = row(BasisTag::H, &mu).get(lambda).cloned().unwrap_or_else(Q::zero);
        insert_term(&mut out, mu.clone(), c / q_int(&mu.z_factor()));
    }
    out
}

/// Basis coefficients of a single power-sum monomial `ψ_μ`.
pub fn row(tag: BasisTag, mu: &Partition) -> Arc<Terms> {
    cached(&ROWS, (tag, mu.clone()), || match tag {
        BasisTag::P => single(mu.clone()),
        BasisTag::S => characters::character_column(mu).into_iter().map(|(l, v)| (l, q_int(&v))).collect(),
        BasisTag::M => {
            // ⟨ψ_μ, h_λ⟩ = z_μ [ψ_μ] h_λ
            let z = q_int(&mu.z_factor());
            let mut out = Terms::new();
            for lambda in partitions_of(mu.weight()) {
                let c = element(BasisTag::H, &lambda).get(mu).cloned().unwrap_or_else(Q::zero);
                insert_term(&mut out, lambda, c * &z);
            }
            out
        }
        BasisTag::H | BasisTag::E | BasisTag::W => {
            mu.parts().iter().fold(unit(), |acc, &n| mul_terms(&acc, &generator_form(tag, n)))
        }
    })
}

/// `ψ_n` written in the free generators of a multiplicative basis.
fn generator_form(tag: BasisTag, n: usize) -> Arc<Terms> {
    cached(&GENERATOR_FORMS, (tag, Partition::row(n)), || match tag {
        // ψ_n = n h_n − Σ_{i<n} ψ_i h_{n−i}
        BasisTag::H => {
            let mut acc: Terms = [(Partition::row(n), q(n as i64))].into();
            for i in 1..n {
                let t = mul_terms(&generator_form(tag, i), &single(Partition::row(n - i)));
                add_scaled(&mut acc, &t, &q(-1));
            }
            acc
        }
        // (−1)^{n−1} ψ_n = n e_n − Σ_{i<n} (−1)^{i−1} e_{n−i} ψ_i
        BasisTag::E => {
            let mut acc: Terms = [(Partition::row(n), q(n as i64))].into();
            for i in 1..n {
                let t = mul_terms(&generator_form(tag, i), &single(Partition::row(n - i)));
                let sign = if (i - 1) % 2 == 0 { q(-1) } else { q(1) };
                add_scaled(&mut acc, &t, &sign);
            }
            if (n - 1) % 2 == 1 {
                acc = acc.into_iter().map(|(l, c)| (l, -c)).collect();
            }
            acc
        }
        // ψ_n = Σ_{d∣n} d θ_d^{n/d}
        BasisTag::W => divisors(n)
            .into_iter()
            .map(|d| {
                let key = Partition::from_parts(vec![d; n / d]).expect("constant parts");
                (key, q(d as i64))
            })
            .collect(),
        BasisTag::P | BasisTag::S | BasisTag::M => unreachable!("not a free generator basis"),
    })
}

pub(crate) type RowEntry = (BasisTag, Partition, Vec<(Partition, Q)>);

pub(crate) fn snapshot_rows() -> Vec<RowEntry> {
    let map = ROWS.read().unwrap();
    let mut out: Vec<RowEntry> = map
        .iter()
        .map(|((t, mu), row)| (*t, mu.clone(), row.iter().map(|(l, c)| (l.clone(), c.clone())).collect()))
        .collect();
    out.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    out
}

pub(crate) fn load_rows(entries: impl IntoIterator<Item = RowEntry>) {
    let mut map = ROWS.write().unwrap();
    for (t, mu, row) in entries {
        let terms: Terms = row.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        map.insert((t, mu), Arc::new(terms));
    }
}

pub(crate) fn clear() {
    ELEMENTS.write().unwrap().clear();
    ROWS.write().unwrap().clear();
    GENERATOR_FORMS.write().unwrap().clear();
}
