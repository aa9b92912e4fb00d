//! Symmetric functions with exact rational coefficients.
//!
//! Elements are stored in the power-sum basis: `f = Σ c_λ ψ_λ` with
//! `ψ_λ = ψ_{λ₁}ψ_{λ₂}…`. In this basis multiplication concatenates
//! partitions, plethysm by `ψ_n` scales indices and both coproducts act
//! monomial by monomial. Other bases are reached through [`convert`].

pub mod characters;
pub mod convert;
pub mod positivity;
pub mod tensor;
pub mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{self, q, q_int, Q};

pub use convert::{from_basis, to_basis_coeffs};
pub use positivity::{is_monomial_positive, is_schur_positive, PositivityReport};
pub use tensor::TensorSymFunc;

/// Degree bound used when the caller does not choose one.
pub const DEFAULT_DEGREE_BOUND: usize = 12;

/// Sparse coefficient map keyed by partitions.
pub type Terms = BTreeMap<Partition, Q>;

/// The six bases: monomial, elementary, complete, power sum, Schur and the
/// Witt basis `θ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisTag {
    M,
    E,
    H,
    P,
    S,
    W,
}

impl BasisTag {
    pub const ALL: [BasisTag; 6] = [BasisTag::M, BasisTag::E, BasisTag::H, BasisTag::P, BasisTag::S, BasisTag::W];

    pub fn letter(self) -> char {
        match self {
            BasisTag::M => 'm',
            BasisTag::E => 'e',
            BasisTag::H => 'h',
            BasisTag::P => 'p',
            BasisTag::S => 's',
            BasisTag::W => 'w',
        }
    }

    pub fn from_letter(c: char) -> Option<BasisTag> {
        BasisTag::ALL.into_iter().find(|t| t.letter() == c)
    }

    /// Bases whose element `b_λ` is the product of `b_{λ_i}`.
    pub fn is_multiplicative(self) -> bool {
        matches!(self, BasisTag::E | BasisTag::H | BasisTag::P | BasisTag::W)
    }
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for BasisTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.trim().chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => BasisTag::from_letter(c),
            _ => None,
        }
        .ok_or_else(|| Error::Parse(format!("unknown basis {s:?}, expected one of m,e,h,p,s,w")))
    }
}

/// A symmetric function of bounded degree, stored in the power-sum basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymFunc {
    bound: usize,
    terms: Terms,
}

fn check_weight(lambda: &Partition, bound: usize) -> Result<()> {
    let degree = lambda.weight();
    if degree > bound {
        Err(Error::Capacity { degree, bound })
    } else {
        Ok(())
    }
}

fn insert_term(terms: &mut Terms, key: Partition, c: Q) {
    if c.is_zero() {
        return;
    }
    match terms.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl SymFunc {
    pub fn zero(bound: usize) -> Self {
        SymFunc { bound, terms: Terms::new() }
    }

    pub fn one(bound: usize) -> Self {
        Self::constant(q(1), bound)
    }

    pub fn constant(c: Q, bound: usize) -> Self {
        let mut terms = Terms::new();
        insert_term(&mut terms, Partition::empty(), c);
        SymFunc { bound, terms }
    }

    /// `ψ_n`; `ψ_0` is taken to be 1.
    pub fn psi(n: usize, bound: usize) -> Result<Self> {
        Self::psi_partition(&Partition::row(n), bound)
    }

    /// `ψ_λ = ψ_{λ₁}ψ_{λ₂}…`.
    pub fn psi_partition(lambda: &Partition, bound: usize) -> Result<Self> {
        check_weight(lambda, bound)?;
        let mut terms = Terms::new();
        terms.insert(lambda.clone(), q(1));
        Ok(SymFunc { bound, terms })
    }

    /// Builds from power-sum coefficients, dropping zeros and checking weights.
    pub fn from_terms(bound: usize, terms: impl IntoIterator<Item = (Partition, Q)>) -> Result<Self> {
        let mut out = Terms::new();
        for (lambda, c) in terms {
            check_weight(&lambda, bound)?;
            insert_term(&mut out, lambda, c);
        }
        Ok(SymFunc { bound, terms: out })
    }

    pub(crate) fn from_terms_unchecked(bound: usize, terms: Terms) -> Self {
        SymFunc { bound, terms }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Power-sum coefficients, zero entries omitted.
    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> Q {
        self.terms.get(lambda).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest weight present, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::weight).max()
    }

    /// Whether every term has weight exactly `n`.
    pub fn is_homogeneous_of(&self, n: usize) -> bool {
        self.terms.keys().all(|l| l.weight() == n)
    }

    /// Largest power-sum index occurring, 0 for constants.
    pub fn max_index(&self) -> usize {
        self.terms.keys().map(Partition::first).max().unwrap_or(0)
    }

    /// Re-labels with a different degree bound.
    pub fn with_bound(&self, bound: usize) -> Result<Self> {
        if let Some(degree) = self.degree() {
            if degree > bound {
                return Err(Error::Capacity { degree, bound });
            }
        }
        Ok(SymFunc { bound, terms: self.terms.clone() })
    }

    pub fn scale(&self, c: &Q) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.bound);
        }
        let terms = self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect();
        SymFunc { bound: self.bound, terms }
    }

    /// Product; fails if a term would exceed the degree bound.
    pub fn mul(&self, other: &SymFunc) -> Result<SymFunc> {
        let bound = self.bound.max(other.bound);
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            if a + b > bound {
                return Err(Error::Capacity { degree: a + b, bound });
            }
        }
        Ok(self.mul_truncating(other))
    }

    /// Product that silently drops terms above the degree bound.
    pub fn mul_truncating(&self, other: &SymFunc) -> SymFunc {
        let bound = self.bound.max(other.bound);
        let mut terms = Terms::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if a.weight() + b.weight() <= bound {
                    insert_term(&mut terms, a.union(b), ca * cb);
                }
            }
        }
        SymFunc { bound, terms }
    }

    pub fn pow(&self, e: usize) -> Result<SymFunc> {
        let mut acc = SymFunc::one(self.bound);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `ψ_n ∘ self`: every power-sum index multiplied by `n`.
    pub fn scale_indices(&self, n: usize) -> Result<SymFunc> {
        if let Some(degree) = self.degree() {
            if degree * n > self.bound {
                return Err(Error::Capacity { degree: degree * n, bound: self.bound });
            }
        }
        let terms = self.terms.iter().map(|(l, c)| (l.scale_parts(n), c.clone())).collect();
        Ok(SymFunc { bound: self.bound, terms })
    }

    /// Plethysm `self ∘ g`.
    ///
    /// `ψ_n ∘ g` scales the indices of `g` by `n`, and `f ↦ f ∘ g` is a ring
    /// map fixing constants.
    pub fn plethysm(&self, g: &SymFunc) -> Result<SymFunc> {
        let bound = self.bound.max(g.bound);
        let needed = self.max_index() * g.degree().unwrap_or(0);
        if needed > bound {
            return Err(Error::Capacity { degree: needed, bound });
        }
        let g = g.with_bound(bound)?;
        let mut powers: BTreeMap<(usize, usize), SymFunc> = BTreeMap::new();
        let mut out = SymFunc::zero(bound);
        for (lambda, c) in &self.terms {
            let mut term = SymFunc::constant(c.clone(), bound);
            for (k, &m) in lambda.multiplicities().iter().enumerate().skip(1) {
                if m == 0 {
                    continue;
                }
                let factor = match powers.get(&(k, m)) {
                    Some(f) => f.clone(),
                    None => {
                        let f = g.scale_indices(k)?.pow(m)?;
                        powers.insert((k, m), f.clone());
                        f
                    }
                };
                term = term.mul(&factor)?;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Co-addition `Δ⁺`, the ring map with `ψ_n ↦ ψ_n⊗1 + 1⊗ψ_n`.
    pub fn coproduct_add(&self) -> TensorSymFunc {
        let mut terms = BTreeMap::new();
        for (mu, c) in &self.terms {
            for (nu, rest, mult) in sub_multisets(mu) {
                tensor::insert(&mut terms, (nu, rest), c * q_int(&mult));
            }
        }
        TensorSymFunc::from_terms_unchecked(self.bound, terms)
    }

    /// Co-multiplication `Δ×`, the ring map with `ψ_n ↦ ψ_n⊗ψ_n`.
    pub fn coproduct_mul(&self) -> TensorSymFunc {
        let terms = self.terms.iter().map(|(mu, c)| ((mu.clone(), mu.clone()), c.clone())).collect();
        TensorSymFunc::from_terms_unchecked(self.bound, terms)
    }

    /// Additive counit: the value at `ψ_n = 0`.
    pub fn counit_add(&self) -> Q {
        self.coeff(&Partition::empty())
    }

    /// Multiplicative counit: the value at `ψ_n = 1`.
    pub fn counit_mul(&self) -> Q {
        self.terms.values().sum()
    }

    /// The involution `ψ_n ↦ (−1)^{n+1} ψ_n`.
    pub fn omega(&self) -> SymFunc {
        let terms = self
            .terms
            .iter()
            .map(|(l, c)| {
                let odd = (l.weight() - l.len()) % 2 == 1;
                (l.clone(), if odd { -c } else { c.clone() })
            })
            .collect();
        SymFunc { bound: self.bound, terms }
    }

    /// Substitutes `ψ_n = a` for every `n`.
    pub fn evaluate_at_scalar(&self, a: &Q) -> Q {
        let mut powers = vec![q(1)];
        let mut total = Q::zero();
        for (l, c) in &self.terms {
            while powers.len() <= l.len() {
                let next = powers.last().unwrap() * a;
                powers.push(next);
            }
            total += c * &powers[l.len()];
        }
        total
    }

    /// Substitutes `ψ_n = Σ_i v_i^n`, i.e. evaluates at finitely many variables.
    pub fn evaluate_finite(&self, values: &[Q]) -> Q {
        let ghost: Vec<Q> = (1..=self.max_index()).map(|n| values.iter().map(|v| rational::pow(v, n)).sum()).collect();
        self.evaluate_ghost(&ghost).expect("ghost vector covers every index")
    }

    /// Substitutes `ψ_n = ghost[n-1]`; fails if an index exceeds the vector.
    pub fn evaluate_ghost(&self, ghost: &[Q]) -> Result<Q> {
        let need = self.max_index();
        if need > ghost.len() {
            return Err(Error::TruncationTooShort { need, got: ghost.len() });
        }
        let mut total = Q::zero();
        for (l, c) in &self.terms {
            let mut v = c.clone();
            for &p in l.parts() {
                v *= &ghost[p - 1];
            }
            total += v;
        }
        Ok(total)
    }

    /// The Witt-basis element `θ_d`, defined by `ψ_n = Σ_{d|n} d θ_d^{n/d}`.
    pub fn theta(d: usize, bound: usize) -> Result<SymFunc> {
        if d == 0 {
            return Err(Error::InvalidShape("θ_0 is undefined".into()));
        }
        convert::theta_element(d, bound)
    }

    /// `d_p = (ψ₁^p − ψ_p)/p` for a prime `p`.
    pub fn d_p(p: usize, bound: usize) -> Result<SymFunc> {
        if !rational::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let lhs = SymFunc::psi_partition(&Partition::column(p), bound)?;
        let diff = &lhs - &SymFunc::psi(p, bound)?;
        Ok(diff.scale(&Q::new(BigInt::one(), BigInt::from(p))))
    }

    /// `d_n := −θ_n`, which agrees with [`SymFunc::d_p`] at primes.
    pub fn d_n(n: usize, bound: usize) -> Result<SymFunc> {
        Ok(-&SymFunc::theta(n, bound)?)
    }

    pub fn h(n: usize, bound: usize) -> Result<SymFunc> {
        from_basis(BasisTag::H, &Partition::row(n), bound)
    }

    pub fn e(n: usize, bound: usize) -> Result<SymFunc> {
        from_basis(BasisTag::E, &Partition::row(n), bound)
    }

    pub fn s(lambda: &Partition, bound: usize) -> Result<SymFunc> {
        from_basis(BasisTag::S, lambda, bound)
    }

    pub fn m(lambda: &Partition, bound: usize) -> Result<SymFunc> {
        from_basis(BasisTag::M, lambda, bound)
    }

    /// Whether every power-sum coefficient has denominator 1.
    pub fn has_integral_psi_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Largest absolute coefficient in power sums, useful for diagnostics.
    pub fn height(&self) -> Q {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_else(Q::zero)
    }
}

/// All ways to split the multiset of parts of `mu` into `(ν, μ−ν)`, with the
/// multiplicity `Π_k C(m_k, j_k)`.
fn sub_multisets(mu: &Partition) -> Vec<(Partition, Partition, BigInt)> {
    let mult = mu.multiplicities();
    let sizes: Vec<(usize, usize)> =
        mult.iter().enumerate().skip(1).filter(|(_, &m)| m > 0).map(|(k, &m)| (k, m)).collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; sizes.len()];
    loop {
        let mut left = Vec::new();
        let mut right = Vec::new();
        let mut c = BigInt::one();
        for (idx, &(k, m)) in sizes.iter().enumerate() {
            let j = choice[idx];
            left.extend(std::iter::repeat_n(k, j));
            right.extend(std::iter::repeat_n(k, m - j));
            c *= rational::binomial(m as u64, j as u64);
        }
        out.push((Partition::new(left), Partition::new(right), c));
        let mut idx = 0;
        loop {
            if idx == sizes.len() {
                return out;
            }
            if choice[idx] < sizes[idx].1 {
                choice[idx] += 1;
                break;
            }
            choice[idx] = 0;
            idx += 1;
        }
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;

    fn add(self, other: &SymFunc) -> SymFunc {
        let mut terms = self.terms.clone();
        for (l, c) in &other.terms {
            insert_term(&mut terms, l.clone(), c.clone());
        }
        SymFunc { bound: self.bound.max(other.bound), terms }
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;

    fn sub(self, other: &SymFunc) -> SymFunc {
        self + &(-other)
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;

    fn neg(self) -> SymFunc {
        let terms = self.terms.iter().map(|(l, c)| (l.clone(), -c)).collect();
        SymFunc { bound: self.bound, terms }
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", text::format_terms(&self.terms, BasisTag::P))
    }
}
