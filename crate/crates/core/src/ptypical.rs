//! p-typical Witt vectors of finite length.
//!
//! `W_(p),k(A)` is described by a grid `(a_{ij})_{i+j≤k}`, the values of a
//! Witt vector on `ψ_p^∘i ∘ d_p^∘j`, subject to
//! `a_{ij}^p = a_{i+1,j} + p·a_{i,j+1}`. Arithmetic happens on the ghost
//! column `a_{i0}`, after which the grid is recomputed.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bigwitt::Domain;
use crate::error::{Error, Result};
use crate::linalg;
use crate::partition::Partition;
use crate::rational::{binomial, is_prime, parse_q, pow, q, Q};
use crate::symfunc::{SymFunc, TensorSymFunc};

fn check_prime(p: usize) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Ghost components `⟨a(ψ_p^∘0), …, a(ψ_p^∘k)⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PTypGhost {
    pub p: usize,
    pub k: usize,
    components: Vec<Q>,
}

impl PTypGhost {
    pub fn new(p: usize, k: usize, components: Vec<Q>) -> Result<Self> {
        check_prime(p)?;
        if components.len() != k + 1 {
            return Err(Error::ParameterMismatch(format!(
                "level {k} needs {} ghost components, got {}",
                k + 1,
                components.len()
            )));
        }
        Ok(PTypGhost { p, k, components })
    }

    /// `⟨a, a^p, a^{p²}, …⟩`.
    pub fn teichmuller(p: usize, k: usize, a: &Q) -> Result<Self> {
        let components = (0..=k).map(|i| pow(a, p.pow(i as u32))).collect();
        Self::new(p, k, components)
    }

    pub fn components(&self) -> &[Q] {
        &self.components
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if (self.p, self.k) != (other.p, other.k) {
            return Err(Error::ParameterMismatch(format!(
                "(p, k) = ({}, {}) vs ({}, {})",
                self.p, self.k, other.p, other.k
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let c = self.components.iter().zip(&other.components).map(|(a, b)| a + b).collect();
        Ok(PTypGhost { p: self.p, k: self.k, components: c })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let c = self.components.iter().zip(&other.components).map(|(a, b)| a * b).collect();
        Ok(PTypGhost { p: self.p, k: self.k, components: c })
    }
}

/// The coordinate grid `(a_{ij})_{i+j≤k}`; `grid[i][j]` exists for `j ≤ k − i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PTypWitt {
    pub p: usize,
    pub k: usize,
    grid: Vec<Vec<Q>>,
}

impl PTypWitt {
    /// Validates shape and the relations `a_{ij}^p = a_{i+1,j} + p a_{i,j+1}`.
    pub fn from_grid(p: usize, k: usize, grid: Vec<Vec<Q>>) -> Result<Self> {
        check_prime(p)?;
        if grid.len() != k + 1 || grid.iter().enumerate().any(|(i, row)| row.len() != k + 1 - i) {
            return Err(Error::InvalidGrid(format!("grid must have entries exactly for i + j ≤ {k}")));
        }
        let w = PTypWitt { p, k, grid };
        if let Some((i, j)) = w.first_violation() {
            return Err(Error::InvalidGrid(format!("a_{i}{j}^{p} ≠ a_{}{j} + {p}·a_{i}{}", i + 1, j + 1)));
        }
        Ok(w)
    }

    fn first_violation(&self) -> Option<(usize, usize)> {
        let pq = q(self.p as i64);
        for s in 0..self.k {
            for j in 0..=s {
                let i = s - j;
                let lhs = pow(&self.grid[i][j], self.p);
                let rhs = &self.grid[i + 1][j] + &pq * &self.grid[i][j + 1];
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn relations_hold(&self) -> bool {
        self.first_violation().is_none()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Q {
        &self.grid[i][j]
    }

    pub fn grid(&self) -> &[Vec<Q>] {
        &self.grid
    }

    /// Entries ordered by `i + j`, then by `j`.
    pub fn entries(&self) -> Vec<((usize, usize), Q)> {
        let mut out = Vec::new();
        for s in 0..=self.k {
            for j in 0..=s {
                out.push(((s - j, j), self.grid[s - j][j].clone()));
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(ghost_to_grid(&grid_to_ghost(self)?.add(&grid_to_ghost(other)?)?))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(ghost_to_grid(&grid_to_ghost(self)?.mul(&grid_to_ghost(other)?)?))
    }

    /// Drops the entries with `i + j = k`.
    pub fn project(&self) -> Result<Self> {
        if self.k == 0 {
            return Err(Error::TruncationTooShort { need: 1, got: 0 });
        }
        let grid = self.grid[..self.k].iter().map(|row| row[..row.len() - 1].to_vec()).collect();
        Ok(PTypWitt { p: self.p, k: self.k - 1, grid })
    }
}

/// `u_{i,0} = a_i`, `u_{i,j+1} = (u_{ij}^p − u_{i+1,j}) / p`.
pub fn ghost_to_grid(g: &PTypGhost) -> PTypWitt {
    let (p, k) = (g.p, g.k);
    let mut grid: Vec<Vec<Q>> = g.components.iter().map(|a| vec![a.clone()]).collect();
    let pq = q(p as i64);
    for j in 0..k {
        for i in 0..k - j {
            let next = (pow(&grid[i][j], p) - &grid[i + 1][j]) / &pq;
            grid[i].push(next);
        }
    }
    PTypWitt { p, k, grid }
}

/// Reads off the ghost column, after checking the grid relations.
pub fn grid_to_ghost(w: &PTypWitt) -> Result<PTypGhost> {
    if let Some((i, j)) = w.first_violation() {
        return Err(Error::InvalidGrid(format!("relation fails at ({i}, {j})")));
    }
    PTypGhost::new(w.p, w.k, w.grid.iter().map(|row| row[0].clone()).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridMembership {
    pub member: bool,
    /// First grid entry outside the domain.
    pub witness: Option<((usize, usize), Q)>,
}

/// Whether every grid entry lies in `dom`.
pub fn member(g: &PTypGhost, dom: Domain) -> GridMembership {
    let w = ghost_to_grid(g);
    let witness = w.entries().into_iter().find(|(_, v)| !dom.contains(v));
    GridMembership { member: witness.is_none(), witness }
}

/// The closed description of `W_(p),2(ℝ₊)` on ghost vectors
/// `⟨a, a^p x, a^{p²} y⟩` with `a > 0`:
/// `0 ≤ x ≤ 1`, `y ≥ 0` and `0 ≤ x^p − y ≤ (1 − x)^p / p^{p−1}`.
pub fn region_check_k2(p: usize, a: &Q, x: &Q, y: &Q) -> Result<bool> {
    check_prime(p)?;
    if !a.is_positive() {
        return Err(Error::ParameterMismatch(format!("a must be positive, got {a}")));
    }
    let one = q(1);
    let xp = pow(x, p);
    let upper = pow(&(&one - x), p) / Q::from_integer(BigInt::from(p).pow(p as u32 - 1));
    let gap = &xp - y;
    Ok(!x.is_negative() && x <= &one && !y.is_negative() && !gap.is_negative() && gap <= upper)
}

/// `ψ_p^∘i ∘ d_p^∘j`, of degree `p^{i+j}`.
pub fn generator_symfunc(p: usize, i: usize, j: usize, bound: usize) -> Result<SymFunc> {
    check_prime(p)?;
    let degree = p.pow((i + j) as u32);
    if degree > bound {
        return Err(Error::Capacity { degree, bound });
    }
    let dp = SymFunc::d_p(p, bound)?;
    let mut g = SymFunc::psi(1, bound)?;
    for _ in 0..j {
        g = dp.plethysm(&g)?;
    }
    g.scale_indices(p.pow(i as u32))
}

/// Exponents `m_{ij}` of a monomial in the generators.
pub type Exponents = BTreeMap<(usize, usize), usize>;

/// Monomials `Π (ψ_p^∘i ∘ d_p^∘j)^{m_{ij}}` with `m_{ij} < p` when `i + j < k`,
/// any exponent when `i + j = k`, and total degree at most `max_degree`.
pub fn basis_monomials(p: usize, k: usize, max_degree: usize) -> Result<Vec<(Exponents, SymFunc)>> {
    check_prime(p)?;
    let mut gens = Vec::new();
    for s in 0..=k {
        for j in 0..=s {
            gens.push((s - j, j));
        }
    }
    let mut out = Vec::new();
    let mut current = Exponents::new();
    enumerate_monomials(p, k, max_degree, &gens, 0, 0, &mut current, &mut out);
    out.into_iter()
        .map(|e| {
            let mut f = SymFunc::one(max_degree);
            for (&(i, j), &m) in &e {
                f = f.mul(&generator_symfunc(p, i, j, max_degree)?.pow(m)?)?;
            }
            Ok((e, f))
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn enumerate_monomials(
    p: usize,
    k: usize,
    max_degree: usize,
    gens: &[(usize, usize)],
    idx: usize,
    degree: usize,
    current: &mut Exponents,
    out: &mut Vec<Exponents>,
) {
    if idx == gens.len() {
        out.push(current.clone());
        return;
    }
    let (i, j) = gens[idx];
    let d = p.pow((i + j) as u32);
    let cap = if i + j < k { p - 1 } else { usize::MAX };
    let mut m = 0;
    while m <= cap && degree + m * d <= max_degree {
        if m > 0 {
            current.insert((i, j), m);
        }
        enumerate_monomials(p, k, max_degree, gens, idx + 1, degree + m * d, current, out);
        m += 1;
    }
    current.remove(&(i, j));
}

/// Number of monomials using only generators with `i + j < k`, each to a
/// power below `p`.
pub fn boundary_free_count(p: usize, k: usize) -> Result<usize> {
    check_prime(p)?;
    let mut gens = Vec::new();
    for s in 0..k {
        for j in 0..=s {
            gens.push((s - j, j));
        }
    }
    let max_degree: usize = gens.iter().map(|&(i, j)| (p - 1) * p.pow((i + j) as u32)).sum();
    let mut out = Vec::new();
    enumerate_monomials(p, k, max_degree, &gens, 0, 0, &mut Exponents::new(), &mut out);
    Ok(out.len())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisLemmaReport {
    pub p: usize,
    pub k: usize,
    pub max_degree: usize,
    pub monomials: usize,
    pub rank: usize,
    pub independent: bool,
    pub boundary_free: usize,
    pub expected_boundary_free: usize,
}

/// Expands every basis monomial of degree at most `max_degree` in power sums
/// and checks linear independence over ℚ by exact rank.
pub fn verify_basis_lemma(p: usize, k: usize, max_degree: usize) -> Result<BasisLemmaReport> {
    let monomials = basis_monomials(p, k, max_degree)?;
    let mut columns: BTreeMap<Partition, usize> = BTreeMap::new();
    for (_, f) in &monomials {
        for l in f.terms().keys() {
            let next = columns.len();
            columns.entry(l.clone()).or_insert(next);
        }
    }
    let rows: Vec<Vec<Q>> = monomials
        .iter()
        .map(|(_, f)| {
            let mut row = vec![Q::zero(); columns.len()];
            for (l, c) in f.terms() {
                row[columns[l]] = c.clone();
            }
            row
        })
        .collect();
    let rank = linalg::rank(&rows);
    Ok(BasisLemmaReport {
        p,
        k,
        max_degree,
        monomials: monomials.len(),
        rank,
        independent: rank == monomials.len(),
        boundary_free: boundary_free_count(p, k)?,
        expected_boundary_free: p.pow((k * (k + 1) / 2) as u32),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DpCoproductReport {
    pub p: usize,
    pub additive_holds: bool,
    pub multiplicative_holds: bool,
    /// The middle coefficients `C(p,i)/p` of the additive formula.
    pub middle_coefficients: Vec<String>,
    pub coefficients_nonnegative_integers: bool,
}

/// Checks `Δ⁺(d_p) = d_p⊗1 + 1⊗d_p + Σ C(p,i)/p ψ₁^i⊗ψ₁^{p−i}` and
/// `Δ×(d_p) = d_p⊗ψ_p + ψ_p⊗d_p + p d_p⊗d_p`.
pub fn dp_coproduct_check(p: usize) -> Result<DpCoproductReport> {
    let bound = p;
    let dp = SymFunc::d_p(p, bound)?;
    let one = SymFunc::one(bound);
    let psi_p = SymFunc::psi(p, bound)?;
    let psi1 = SymFunc::psi(1, bound)?;
    let mut middle = Vec::new();
    let mut expected_add = &TensorSymFunc::pure(&dp, &one) + &TensorSymFunc::pure(&one, &dp);
    for i in 1..p {
        let c = Q::new(binomial(p as u64, i as u64), BigInt::from(p));
        let t = TensorSymFunc::pure(&psi1.pow(i)?, &psi1.pow(p - i)?).scale(&c);
        expected_add = &expected_add + &t;
        middle.push(c);
    }
    let expected_mul = &(&TensorSymFunc::pure(&dp, &psi_p) + &TensorSymFunc::pure(&psi_p, &dp))
        + &TensorSymFunc::pure(&dp, &dp).scale(&q(p as i64));
    Ok(DpCoproductReport {
        p,
        additive_holds: dp.coproduct_add() == expected_add,
        multiplicative_holds: dp.coproduct_mul() == expected_mul,
        coefficients_nonnegative_integers: middle.iter().all(|c| c.is_integer() && !c.is_negative()),
        middle_coefficients: middle.iter().map(Q::to_string).collect(),
    })
}

/// Closed formulas for `k = 1`, kept as an oracle independent of the ghost
/// arithmetic.
pub mod closed_k1 {
    use super::*;

    fn cross_sum(p: usize, a: &Q, b: &Q) -> Q {
        (1..p).map(|i| Q::new(binomial(p as u64, i as u64), BigInt::from(p)) * pow(a, i) * pow(b, p - i)).sum()
    }

    /// Grid `(a₀₀, a₁₀, a₀₁)` sum.
    pub fn grid_add(p: usize, a: [&Q; 3], b: [&Q; 3]) -> [Q; 3] {
        [a[0] + b[0], a[1] + b[1], a[2] + b[2] + cross_sum(p, a[0], b[0])]
    }

    /// Grid `(a₀₀, a₁₀, a₀₁)` product.
    pub fn grid_mul(p: usize, a: [&Q; 3], b: [&Q; 3]) -> [Q; 3] {
        let pq = q(p as i64);
        [a[0] * b[0], a[1] * b[1], a[1] * b[2] + a[2] * b[1] + pq * a[2] * b[2]]
    }

    /// Sum in θ-coordinates `(a₀, a₁) = (x₀₀, −x₀₁)`.
    pub fn theta_add(p: usize, a: [&Q; 2], b: [&Q; 2]) -> [Q; 2] {
        [a[0] + b[0], a[1] + b[1] - cross_sum(p, a[0], b[0])]
    }

    /// Product in θ-coordinates.
    pub fn theta_mul(p: usize, a: [&Q; 2], b: [&Q; 2]) -> [Q; 2] {
        let pq = q(p as i64);
        [a[0] * b[0], pow(a[0], p) * b[1] + a[1] * pow(b[0], p) + pq * a[1] * b[1]]
    }

    pub const THETA_ZERO: [i64; 2] = [0, 0];
    pub const THETA_ONE: [i64; 2] = [1, 0];
}

/// JSON form: `{"p": 2, "k": 2, "ghost": [...]}` or with `"grid": {"0,0": "1", …}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PTypJson {
    pub p: usize,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ghost: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<BTreeMap<String, String>>,
}

impl PTypJson {
    pub fn to_ghost(&self) -> Result<PTypGhost> {
        match (&self.ghost, &self.grid) {
            (Some(g), None) => {
                let c = g.iter().map(|s| parse_q(s)).collect::<Result<Vec<_>>>()?;
                PTypGhost::new(self.p, self.k, c)
            }
            (None, Some(map)) => {
                let mut grid: Vec<Vec<Option<Q>>> = (0..=self.k).map(|i| vec![None; self.k + 1 - i]).collect();
                for (key, v) in map {
                    let (i, j) = key
                        .split_once(',')
                        .and_then(|(i, j)| Some((i.trim().parse::<usize>().ok()?, j.trim().parse::<usize>().ok()?)))
                        .ok_or_else(|| Error::Parse(format!("bad grid key {key:?}, expected \"i,j\"")))?;
                    if i + j > self.k {
                        return Err(Error::InvalidGrid(format!("entry ({i}, {j}) outside i + j ≤ {}", self.k)));
                    }
                    grid[i][j] = Some(parse_q(v)?);
                }
                let grid = grid
                    .into_iter()
                    .enumerate()
                    .map(|(i, row)| {
                        row.into_iter()
                            .enumerate()
                            .map(|(j, v)| v.ok_or_else(|| Error::InvalidGrid(format!("missing entry ({i}, {j})"))))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                grid_to_ghost(&PTypWitt::from_grid(self.p, self.k, grid)?)
            }
            _ => Err(Error::Parse("give exactly one of \"ghost\" or \"grid\"".into())),
        }
    }

    pub fn from_grid(w: &PTypWitt) -> Self {
        let grid = w.entries().into_iter().map(|((i, j), v)| (format!("{i},{j}"), v.to_string())).collect();
        PTypJson { p: w.p, k: w.k, ghost: None, grid: Some(grid) }
    }
}
