//! Elements of `Λ⊗Λ`, stored in the `ψ⊗ψ` basis.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use super::{convert, BasisTag, SymFunc};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{q, Q};

pub type TensorKey = (Partition, Partition);
pub type TensorTerms = BTreeMap<TensorKey, Q>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorSymFunc {
    bound: usize,
    terms: TensorTerms,
}

pub(crate) fn insert(terms: &mut TensorTerms, key: TensorKey, c: Q) {
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

impl TensorSymFunc {
    pub fn zero(bound: usize) -> Self {
        TensorSymFunc { bound, terms: TensorTerms::new() }
    }

    pub fn from_terms(bound: usize, terms: impl IntoIterator<Item = (TensorKey, Q)>) -> Result<Self> {
        let mut out = TensorTerms::new();
        for ((a, b), c) in terms {
            for leg in [&a, &b] {
                if leg.weight() > bound {
                    return Err(Error::Capacity { degree: leg.weight(), bound });
                }
            }
            insert(&mut out, (a, b), c);
        }
        Ok(TensorSymFunc { bound, terms: out })
    }

    pub(crate) fn from_terms_unchecked(bound: usize, terms: TensorTerms) -> Self {
        TensorSymFunc { bound, terms }
    }

    /// The pure tensor `f⊗g`.
    pub fn pure(f: &SymFunc, g: &SymFunc) -> Self {
        let mut terms = TensorTerms::new();
        for (a, ca) in f.terms() {
            for (b, cb) in g.terms() {
                insert(&mut terms, (a.clone(), b.clone()), ca * cb);
            }
        }
        TensorSymFunc { bound: f.bound().max(g.bound()), terms }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn terms(&self) -> &TensorTerms {
        &self.terms
    }

    pub fn coeff(&self, a: &Partition, b: &Partition) -> Q {
        self.terms.get(&(a.clone(), b.clone())).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut terms = TensorTerms::new();
        for (k, v) in &self.terms {
            insert(&mut terms, k.clone(), v * c);
        }
        TensorSymFunc { bound: self.bound, terms }
    }

    /// Product in `Λ⊗Λ`, legwise concatenation.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let bound = self.bound.max(other.bound);
        let mut terms = TensorTerms::new();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                let (a, b) = (a1.union(a2), b1.union(b2));
                for leg in [&a, &b] {
                    if leg.weight() > bound {
                        return Err(Error::Capacity { degree: leg.weight(), bound });
                    }
                }
                insert(&mut terms, (a, b), c1 * c2);
            }
        }
        Ok(TensorSymFunc { bound, terms })
    }

    /// Exchanges the two legs.
    pub fn swap(&self) -> Self {
        let terms = self.terms.iter().map(|((a, b), c)| ((b.clone(), a.clone()), c.clone())).collect();
        TensorSymFunc { bound: self.bound, terms }
    }

    /// Applies a linear functional given on `ψ_μ` to the left leg.
    pub fn contract_left(&self, functional: impl Fn(&Partition) -> Q) -> SymFunc {
        let mut out = SymFunc::zero(self.bound);
        for ((a, b), c) in &self.terms {
            let v = functional(a);
            if !v.is_zero() {
                let term = SymFunc::from_terms_unchecked(self.bound, [(b.clone(), c * v)].into());
                out = &out + &term;
            }
        }
        out
    }

    /// Applies a linear functional given on `ψ_μ` to the right leg.
    pub fn contract_right(&self, functional: impl Fn(&Partition) -> Q) -> SymFunc {
        self.swap().contract_left(functional)
    }

    /// Evaluates at a pair of ghost vectors, `ψ_n⊗1 ↦ x_n` and `1⊗ψ_n ↦ y_n`.
    pub fn evaluate_ghost(&self, x: &[Q], y: &[Q]) -> Result<Q> {
        let mut total = Q::zero();
        for ((a, b), c) in &self.terms {
            let fa = SymFunc::from_terms_unchecked(self.bound, [(a.clone(), q(1))].into());
            let fb = SymFunc::from_terms_unchecked(self.bound, [(b.clone(), q(1))].into());
            total += c * fa.evaluate_ghost(x)? * fb.evaluate_ghost(y)?;
        }
        Ok(total)
    }

    /// Coefficients in `b_λ⊗b_μ` for the given basis `b`.
    pub fn to_basis_coeffs(&self, tag: BasisTag) -> BTreeMap<TensorKey, Q> {
        let mut out = TensorTerms::new();
        for ((a, b), c) in &self.terms {
            let ra = convert::row(tag, a);
            let rb = convert::row(tag, b);
            for (la, ca) in ra.iter() {
                for (lb, cb) in rb.iter() {
                    insert(&mut out, (la.clone(), lb.clone()), c * ca * cb);
                }
            }
        }
        out
    }

    /// Builds from coefficients given in `b⊗b` for a basis `b`.
    pub fn from_basis_coeffs(
        tag: BasisTag,
        coeffs: impl IntoIterator<Item = (TensorKey, Q)>,
        bound: usize,
    ) -> Result<Self> {
        let mut out = TensorSymFunc::zero(bound);
        for ((a, b), c) in coeffs {
            let fa = convert::from_basis(tag, &a, bound)?;
            let fb = convert::from_basis(tag, &b, bound)?;
            out = &out + &TensorSymFunc::pure(&fa, &fb).scale(&c);
        }
        Ok(out)
    }
}

impl Add for &TensorSymFunc {
    type Output = TensorSymFunc;

    fn add(self, other: &TensorSymFunc) -> TensorSymFunc {
        let mut terms = self.terms.clone();
        for (k, v) in &other.terms {
            insert(&mut terms, k.clone(), v.clone());
        }
        TensorSymFunc { bound: self.bound.max(other.bound), terms }
    }
}

impl Neg for &TensorSymFunc {
    type Output = TensorSymFunc;

    fn neg(self) -> TensorSymFunc {
        self.scale(&q(-1))
    }
}

impl Sub for &TensorSymFunc {
    type Output = TensorSymFunc;

    fn sub(self, other: &TensorSymFunc) -> TensorSymFunc {
        self + &(-other)
    }
}
