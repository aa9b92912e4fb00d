//! Total nonnegativity of truncated series and the polynomial criterion for
//! `W(ℕ)`.
//!
//! The Toeplitz matrix of `1 + a₁t + … + a_nt^n + …` has entries `a_{i−j}`
//! with `a₀ = 1` and `a_m = 0` for `m < 0`. Only minors with row and column
//! indices in `0..=n` are determined by the truncation. Sorting the rows and
//! columns of such a minor, a nonzero term of its expansion forces
//! `j_k ≤ i_k` for every `k`. If the chain breaks (`j_{k+1} > i_k`) the minor
//! is block triangular and equals a product of smaller minors in the same
//! window, and minors are invariant under shifting all indices. So it
//! suffices to check unbroken chains starting at column 0.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::Poly;
use crate::rational::{common_denominator, factorial, pow, q_int, Q};
use crate::series::{mul_full, TruncSeries};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    #[serde(serialize_with = "ser_q")]
    pub value: Q,
}

fn ser_q<S: serde::Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorReport {
    /// Every minor of order `≤ order` is nonnegative.
    pub nonnegative: bool,
    pub order: usize,
    pub truncation: usize,
    /// First negative minor found.
    pub witness: Option<MinorWitness>,
    /// Number of unbroken-chain minors evaluated.
    pub checked: usize,
}

/// Integer Toeplitz entries `D·a_m` for `m = 0..=n`, plus `D`.
struct ScaledEntries {
    entries: Vec<BigInt>,
    denom: BigInt,
}

impl ScaledEntries {
    fn new(s: &TruncSeries) -> Self {
        let full = s.full();
        let denom = common_denominator(full.iter());
        let entries = full.iter().map(|a| (a * Q::from_integer(denom.clone())).to_integer()).collect();
        ScaledEntries { entries, denom }
    }

    fn at(&self, m: isize) -> BigInt {
        if m < 0 || m as usize >= self.entries.len() {
            BigInt::zero()
        } else {
            self.entries[m as usize].clone()
        }
    }

    fn minor(&self, rows: &[usize], cols: &[usize]) -> Q {
        let m: Vec<Vec<BigInt>> =
            rows.iter().map(|&i| cols.iter().map(|&j| self.at(i as isize - j as isize)).collect()).collect();
        Q::new(bareiss(m), self.denom.pow(rows.len() as u32))
    }
}

/// Fraction-free determinant.
fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// The minor of `(a_{i−j})` on the given rows and columns, reading
/// coefficients past the truncation as zero.
pub fn minor_value(s: &TruncSeries, rows: &[usize], cols: &[usize]) -> Result<Q> {
    if rows.len() != cols.len() {
        return Err(Error::InvalidShape(format!("{} rows vs {} columns", rows.len(), cols.len())));
    }
    Ok(ScaledEntries::new(s).minor(rows, cols))
}

/// Checks every minor of order at most `order` of the Toeplitz matrix of `s`
/// with all indices in `0..=n`. A pass is a statement about the truncation
/// only.
pub fn toeplitz_minors_nonneg(s: &TruncSeries, order: usize) -> Result<MinorReport> {
    let n = s.len();
    if order > n {
        return Err(Error::OrderTooLarge { order, n });
    }
    let entries = ScaledEntries::new(s);
    let mut search = ChainSearch { entries: &entries, n, rows: Vec::new(), cols: Vec::new(), checked: 0 };
    let mut witness = None;
    for r in 1..=order {
        if let Some(w) = search.run(r) {
            witness = Some(w);
            break;
        }
    }
    Ok(MinorReport { nonnegative: witness.is_none(), order, truncation: n, witness, checked: search.checked })
}

/// Checks every minor of order at most `order` of the full, infinite
/// Toeplitz matrix of the polynomial `s`, whose coefficients past the
/// truncation are zero.
///
/// A chain minor with `i_k − j_k > d = deg s` has a zero block in its
/// lower left corner that is too large, so it vanishes. Nonzero chains
/// therefore satisfy `i_{k+1} ≤ j_{k+1} + d ≤ i_k + d`, and all their indices
/// stay below `order·d`. Padding to that length makes the bounded check
/// exact.
pub fn polynomial_minors_nonneg(s: &TruncSeries, order: usize) -> Result<MinorReport> {
    let n = (order * s.degree()).max(order).max(s.len());
    let mut coeffs = s.coeffs().to_vec();
    coeffs.resize(n, Q::zero());
    toeplitz_minors_nonneg(&TruncSeries::new(coeffs)?, order)
}

struct ChainSearch<'a> {
    entries: &'a ScaledEntries,
    n: usize,
    rows: Vec<usize>,
    cols: Vec<usize>,
    checked: usize,
}

impl ChainSearch<'_> {
    fn run(&mut self, order: usize) -> Option<MinorWitness> {
        self.rows.clear();
        self.cols = vec![0];
        self.extend_row(order)
    }

    /// Chooses `i_k` for the latest column `j_k`.
    fn extend_row(&mut self, order: usize) -> Option<MinorWitness> {
        let j = *self.cols.last().expect("chain starts with a column");
        let lo = match self.rows.last() {
            Some(&prev) => (prev + 1).max(j),
            None => j,
        };
        for i in lo..=self.n {
            self.rows.push(i);
            let found = if self.rows.len() == order {
                self.checked += 1;
                let value = self.entries.minor(&self.rows, &self.cols);
                value.is_negative().then(|| MinorWitness { rows: self.rows.clone(), cols: self.cols.clone(), value })
            } else {
                self.extend_col(order)
            };
            self.rows.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// Chooses `j_{k+1}` with `j_k < j_{k+1} ≤ i_k`.
    fn extend_col(&mut self, order: usize) -> Option<MinorWitness> {
        let (j, i) = (*self.cols.last().unwrap(), *self.rows.last().unwrap());
        for next in j + 1..=i {
            self.cols.push(next);
            let found = self.extend_row(order);
            self.cols.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// Row and column indices realising `s_{λ/μ}` as a minor of `(a_{i−j})`,
/// via `s_{λ/μ} = det(h_{λ_k − μ_l − k + l})`.
pub fn skew_minor_indices(lambda: &Partition, mu: &Partition) -> Result<(Vec<usize>, Vec<usize>)> {
    if !lambda.contains(mu) {
        return Err(Error::InvalidShape(format!("{mu} is not contained in {lambda}")));
    }
    let l = lambda.len();
    let part = |p: &Partition, k: usize| p.parts().get(k).copied().unwrap_or(0);
    let mut rows: Vec<usize> = (0..l).map(|k| part(lambda, k) + l - 1 - k).collect();
    let mut cols: Vec<usize> = (0..l).map(|k| part(mu, k) + l - 1 - k).collect();
    rows.reverse();
    cols.reverse();
    Ok((rows, cols))
}

/// `s_{λ/μ}` evaluated at `h_m = a_m`. The shape must fit the truncation:
/// `λ₁ + ℓ(λ) − 1 ≤ n`.
pub fn skew_schur_witness(s: &TruncSeries, lambda: &Partition, mu: &Partition) -> Result<Q> {
    let (rows, cols) = skew_minor_indices(lambda, mu)?;
    if rows.last().is_some_and(|&r| r > s.len()) {
        return Err(Error::InvalidShape(format!("{lambda}/{mu} needs coefficients past t^{}", s.len())));
    }
    minor_value(s, &rows, &cols)
}

fn integer_poly(s: &TruncSeries) -> Result<Poly> {
    if let Some(c) = s.coeffs().iter().find(|c| !c.is_integer()) {
        return Err(Error::NotIntegral(format!("coefficient {c}")));
    }
    Ok(Poly::new(s.full()))
}

/// Whether `1 + a₁t + … + a_nt^n`, with integer coefficients, has only real
/// roots, all `≤ 0`, counted with multiplicity.
pub fn nonpositive_real_roots(s: &TruncSeries) -> Result<bool> {
    let p = integer_poly(s)?;
    let degree = p.degree().unwrap_or(0);
    let counted: usize = p.square_free_decomposition().iter().map(|(f, mult)| f.count_nonpositive_roots() * mult).sum();
    Ok(counted == degree)
}

/// The multiset `{a_i}` with `s = Π(1 + a_i t)`, `a_i` positive integers, if
/// such a factorization exists.
pub fn linear_factors(s: &TruncSeries) -> Result<Option<Vec<BigInt>>> {
    let mut p = integer_poly(s)?;
    let mut out = Vec::new();
    while let Some(d) = p.degree().filter(|&d| d > 0) {
        let lead = p.coeffs()[d].to_integer();
        if !lead.is_positive() {
            return Ok(None);
        }
        let found = positive_divisors(&lead).into_iter().find(|a| {
            let (_, r) = p.div_rem(&Poly::new(vec![Q::one(), q_int(a)]));
            r.is_zero()
        });
        match found {
            Some(a) => {
                p = p.div_rem(&Poly::new(vec![Q::one(), q_int(&a)])).0;
                out.push(a);
            }
            None => return Ok(None),
        }
    }
    out.sort();
    Ok(Some(out))
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if n.is_multiple_of(&d) {
            out.push(d.clone());
            let other = n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

/// `e^{γt} Π(1 + α_i t) / Π(1 − β_i t)` truncated after `t^n`.
pub fn edrei_thoma_truncation(gamma: &Q, alphas: &[Q], betas: &[Q], n: usize) -> Result<TruncSeries> {
    let named = std::iter::once(("gamma", gamma))
        .chain(alphas.iter().map(|a| ("alpha", a)))
        .chain(betas.iter().map(|b| ("beta", b)));
    for (name, v) in named {
        if v.is_negative() {
            return Err(Error::NegativeParameter { name: name.into(), value: v.to_string() });
        }
    }
    let mut full: Vec<Q> = (0..=n).map(|m| pow(gamma, m) / q_int(&factorial(m as u64))).collect();
    for a in alphas {
        full = mul_full(&full, &[Q::one(), a.clone()], n);
    }
    for b in betas {
        let geometric: Vec<Q> = (0..=n).map(|m| pow(b, m)).collect();
        full = mul_full(&full, &geometric, n);
    }
    TruncSeries::from_full(full)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorialBoundReport {
    pub holds: bool,
    /// First `m` with `a_m > a₁^m / m!`, and `a_m`.
    #[serde(serialize_with = "ser_bound_witness")]
    pub witness: Option<(usize, Q)>,
}

fn ser_bound_witness<S: serde::Serializer>(w: &Option<(usize, Q)>, s: S) -> std::result::Result<S::Ok, S::Error> {
    w.as_ref().map(|(m, a)| (m, a.to_string())).serialize(s)
}

/// `a_m ≤ a₁^m / m!` for `2 ≤ m ≤ n`.
pub fn factorial_bound_check(s: &TruncSeries) -> FactorialBoundReport {
    let a1 = s.coeff(1);
    let witness =
        (2..=s.len()).map(|m| (m, s.coeff(m as isize))).find(|(m, a)| *a > pow(&a1, *m) / q_int(&factorial(*m as u64)));
    FactorialBoundReport { holds: witness.is_none(), witness }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::rational::{q, q_frac};

    fn series(c: &[i64]) -> TruncSeries {
        TruncSeries::new(c.iter().map(|&x| q(x)).collect()).unwrap()
    }

    /// Every `r × r` minor with indices below `bound`, by brute force.
    fn all_minors(s: &TruncSeries, r: usize, bound: usize) -> Vec<(Vec<usize>, Vec<usize>, Q)> {
        fn subsets(bound: usize, r: usize) -> Vec<Vec<usize>> {
            if r == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for last in (r - 1)..bound {
                for mut s in subsets(last, r - 1) {
                    s.push(last);
                    out.push(s);
                }
            }
            out
        }
        let sets = subsets(bound, r);
        let mut out = Vec::new();
        for rows in &sets {
            for cols in &sets {
                out.push((rows.clone(), cols.clone(), minor_value(s, rows, cols).unwrap()));
            }
        }
        out
    }

    #[test]
    fn examples() {
        let r = toeplitz_minors_nonneg(&series(&[3, 2]), 2).unwrap();
        assert!(r.nonnegative);
        let r = toeplitz_minors_nonneg(&series(&[3, 2, 0]), 3).unwrap();
        assert!(r.nonnegative);
        let r = toeplitz_minors_nonneg(&series(&[1, 1]), 2).unwrap();
        assert!(r.nonnegative);
        let r = toeplitz_minors_nonneg(&series(&[1, 1, 0]), 3).unwrap();
        let w = r.witness.unwrap();
        assert_eq!((w.rows, w.cols, w.value), (vec![1, 2, 3], vec![0, 1, 2], q(-1)));
        for n in 1..6 {
            assert!(toeplitz_minors_nonneg(&TruncSeries::one(n).unwrap(), n).unwrap().nonnegative);
        }
        assert!(matches!(toeplitz_minors_nonneg(&series(&[1, 1]), 3), Err(Error::OrderTooLarge { .. })));
    }

    #[test]
    fn witness_matches_formula() {
        // a₁³ − 2a₁a₂ + a₃ with a₃ = 0
        let s = series(&[1, 1]);
        assert_eq!(minor_value(&s, &[1, 2, 3], &[0, 1, 2]).unwrap(), q(-1));
    }

    #[test]
    fn chain_search_agrees_with_brute_force() {
        let samples: [&[i64]; 6] = [&[1, 1], &[3, 2], &[2, 1], &[1, 1, 1], &[4, 5, 2], &[2, 2, 1]];
        for c in samples {
            let s = series(c);
            for r in 1..=c.len().min(3) {
                let brute_ok = (1..=r).all(|k| all_minors(&s, k, c.len() + 1).iter().all(|(_, _, v)| !v.is_negative()));
                assert_eq!(toeplitz_minors_nonneg(&s, r).unwrap().nonnegative, brute_ok, "{c:?} r={r}");
            }
        }
    }

    #[test]
    fn polynomial_padding_is_exact() {
        let samples: [&[i64]; 5] = [&[1, 1], &[3, 2], &[1, 0, 1], &[2, 1], &[4, 5, 2]];
        for c in samples {
            let s = series(c);
            for r in 1..=3 {
                let window = r * c.len() + 3;
                let brute_ok = (1..=r).all(|k| all_minors(&s, k, window).iter().all(|(_, _, v)| !v.is_negative()));
                assert_eq!(polynomial_minors_nonneg(&s, r).unwrap().nonnegative, brute_ok, "{c:?} r={r}");
            }
        }
        assert!(polynomial_minors_nonneg(&series(&[3, 2]), 3).unwrap().nonnegative);
    }

    #[test]
    fn skew_shapes() {
        let s = TruncSeries::new(vec![q(2), q_frac(3, 2), q(7)]).unwrap();
        assert_eq!(skew_schur_witness(&s, &part![1], &part![]).unwrap(), q(2));
        assert_eq!(skew_schur_witness(&s, &part![1, 1], &part![]).unwrap(), q(4) - q_frac(3, 2));
        assert_eq!(skew_schur_witness(&s, &part![2, 1], &part![1]).unwrap(), q(4));
        assert!(matches!(skew_schur_witness(&s, &part![1], &part![2]), Err(Error::InvalidShape(_))));
    }

    #[test]
    fn roots() {
        assert!(nonpositive_real_roots(&series(&[3, 2])).unwrap());
        assert!(!nonpositive_real_roots(&series(&[1, 1])).unwrap());
        assert!(nonpositive_real_roots(&series(&[2, 1])).unwrap());
        assert!(nonpositive_real_roots(&series(&[3, 1])).unwrap());
        assert!(!nonpositive_real_roots(&series(&[-3, 2])).unwrap());
        assert!(nonpositive_real_roots(&series(&[0, 0])).unwrap());
        let half = TruncSeries::new(vec![q_frac(1, 2)]).unwrap();
        assert!(matches!(nonpositive_real_roots(&half), Err(Error::NotIntegral(_))));
    }

    #[test]
    fn factoring() {
        let f = linear_factors(&series(&[6, 11, 6])).unwrap().unwrap();
        assert_eq!(f, [1, 2, 3].map(BigInt::from));
        assert_eq!(linear_factors(&series(&[3, 1])).unwrap(), None);
        assert_eq!(linear_factors(&series(&[0, 0])).unwrap(), Some(vec![]));
        assert_eq!(linear_factors(&series(&[1, -2])).unwrap(), None);
    }

    #[test]
    fn edrei_thoma_examples() {
        let e = edrei_thoma_truncation(&q(1), &[], &[], 5).unwrap();
        for m in 1..=5 {
            assert_eq!(e.coeff(m), Q::new(BigInt::one(), factorial(m as u64)));
        }
        let g = edrei_thoma_truncation(&q(0), &[], &[q_frac(1, 2)], 5).unwrap();
        assert!((1..=5).all(|m| g.coeff(m) == q_frac(1, 1 << m)));
        let r = edrei_thoma_truncation(&q(0), &[q(1)], &[q(1)], 4).unwrap();
        assert_eq!(r.coeffs(), [q(2), q(2), q(2), q(2)]);
        assert!(edrei_thoma_truncation(&q(-1), &[], &[], 3).is_err());
        assert!(edrei_thoma_truncation(&q(0), &[q(-1)], &[], 3).is_err());
    }

    #[test]
    fn factorial_bound() {
        assert!(factorial_bound_check(&series(&[2, 1])).holds);
        let r = factorial_bound_check(&series(&[1, 1]));
        assert_eq!(r.witness, Some((2, q(1))));
        let e = edrei_thoma_truncation(&q(3), &[], &[], 6).unwrap();
        assert!(factorial_bound_check(&e).holds);
    }
}
