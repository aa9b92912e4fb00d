//! Truncated power series `1 + a₁t + … + a_nt^n`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{q, Q};

/// A truncated series with constant term 1. Coefficients past `n` are
/// unknown for series arithmetic and read as zero for polynomial questions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<Q>,
}

impl TruncSeries {
    /// From `a₁..a_n`; `n` must be at least 1.
    pub fn new(coeffs: Vec<Q>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::TruncationTooShort { need: 1, got: 0 });
        }
        Ok(TruncSeries { coeffs })
    }

    /// From `a₀..a_n` with `a₀ = 1`.
    pub fn from_full(full: Vec<Q>) -> Result<Self> {
        match full.split_first() {
            Some((a0, rest)) if a0.is_one() => Self::new(rest.to_vec()),
            Some((a0, _)) => Err(Error::Parse(format!("constant term must be 1, got {a0}"))),
            None => Err(Error::TruncationTooShort { need: 1, got: 0 }),
        }
    }

    /// The constant series 1 truncated at `n`.
    pub fn one(n: usize) -> Result<Self> {
        Self::new(vec![Q::zero(); n])
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `a₁..a_n`.
    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// `a_m` with `a₀ = 1` and zero outside `0..=n`.
    pub fn coeff(&self, m: isize) -> Q {
        match m {
            0 => q(1),
            m if m < 0 || m as usize > self.coeffs.len() => Q::zero(),
            m => self.coeffs[m as usize - 1].clone(),
        }
    }

    /// `a₀..a_n`.
    pub fn full(&self) -> Vec<Q> {
        std::iter::once(q(1)).chain(self.coeffs.iter().cloned()).collect()
    }

    /// Index of the last nonzero coefficient, the degree as a polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::TruncationMismatch { left: self.len(), right: other.len() });
        }
        Self::from_full(mul_full(&self.full(), &other.full(), self.len()))
    }

    pub fn inverse(&self) -> Self {
        Self::from_full(inverse_full(&self.full(), self.len())).expect("unit constant term")
    }

    /// `t ↦ −t`.
    pub fn negate_variable(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().map(|(i, c)| if i % 2 == 0 { -c } else { c.clone() }).collect();
        TruncSeries { coeffs }
    }
}

/// Product of two series given as `a₀..`, truncated after `t^n`.
pub fn mul_full(a: &[Q], b: &[Q], n: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); n + 1];
    for (i, x) in a.iter().enumerate().take(n + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Inverse of a series with `a₀ = 1`, truncated after `t^n`.
pub fn inverse_full(a: &[Q], n: usize) -> Vec<Q> {
    assert!(a.first().is_some_and(One::is_one), "series must start with 1");
    let mut out = vec![Q::zero(); n + 1];
    out[0] = q(1);
    for m in 1..=n {
        let mut s = Q::zero();
        for k in 1..=m.min(a.len() - 1) {
            s += &a[k] * &out[m - k];
        }
        out[m] = -s;
    }
    out
}
