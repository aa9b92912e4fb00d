//! Truncated big Witt vectors over subsemirings of ℚ.
//!
//! A Witt vector of truncation `n` is a ring map `Λ → A` known on symmetric
//! functions of degree at most `n`. It is stored by its ghost components
//! `⟨x(ψ₁), …, x(ψ_n)⟩`, on which sum and product are componentwise; all
//! other coordinates are derived.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::rational::{divisors, parse_q, pow, q, Q};
use crate::series::{inverse_full, TruncSeries};
use crate::symfunc::{convert, BasisTag, SymFunc};

/// Coefficient semirings, each a subset of ℚ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Domain {
    #[serde(rename = "nat")]
    Nat,
    #[serde(rename = "int")]
    Int,
    #[serde(rename = "qplus")]
    NonnegRat,
    #[serde(rename = "q")]
    Rat,
}

impl Domain {
    pub fn contains(self, x: &Q) -> bool {
        match self {
            Domain::Nat => x.is_integer() && !x.is_negative(),
            Domain::Int => x.is_integer(),
            Domain::NonnegRat => !x.is_negative(),
            Domain::Rat => true,
        }
    }
}

impl FromStr for Domain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "nat" => Ok(Domain::Nat),
            "int" => Ok(Domain::Int),
            "qplus" => Ok(Domain::NonnegRat),
            "q" => Ok(Domain::Rat),
            other => Err(Error::Parse(format!("unknown domain {other:?}, expected nat|int|qplus|q"))),
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Domain::Nat => "nat",
            Domain::Int => "int",
            Domain::NonnegRat => "qplus",
            Domain::Rat => "q",
        };
        write!(f, "{s}")
    }
}

/// The series `(Σ x(e_i)(ε₁t)^i)^{ε₂}`; `(−,−)` is the canonical `σ`, whose
/// coefficients are the values on `h_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SeriesNormalization {
    pub eps1_negative: bool,
    pub eps2_negative: bool,
}

impl SeriesNormalization {
    pub const CANONICAL: Self = SeriesNormalization { eps1_negative: true, eps2_negative: true };
    pub const PLUS_PLUS: Self = SeriesNormalization { eps1_negative: false, eps2_negative: false };
    pub const ALL: [Self; 4] = [
        SeriesNormalization { eps1_negative: false, eps2_negative: false },
        SeriesNormalization { eps1_negative: false, eps2_negative: true },
        SeriesNormalization { eps1_negative: true, eps2_negative: false },
        SeriesNormalization { eps1_negative: true, eps2_negative: true },
    ];
}

impl FromStr for SeriesNormalization {
    type Err = Error;

    /// `"+-"` means `ε₁ = +1`, `ε₂ = −1`.
    fn from_str(s: &str) -> Result<Self> {
        let sign = |c| match c {
            '+' => Ok(false),
            '-' => Ok(true),
            _ => Err(Error::Parse(format!("bad normalization {s:?}, expected two of +/-"))),
        };
        let chars: Vec<char> = s.trim().chars().collect();
        if chars.len() != 2 {
            return Err(Error::Parse(format!("bad normalization {s:?}, expected two of +/-")));
        }
        Ok(SeriesNormalization { eps1_negative: sign(chars[0])?, eps2_negative: sign(chars[1])? })
    }
}

impl fmt::Display for SeriesNormalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = |neg: bool| if neg { '-' } else { '+' };
        write!(f, "{}{}", c(self.eps1_negative), c(self.eps2_negative))
    }
}

/// Verdict of an effectivity test with the first failing basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    pub witness: Option<(Partition, Q)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittVector {
    ghost: Vec<Q>,
}

impl WittVector {
    pub fn from_ghost(ghost: Vec<Q>) -> Result<Self> {
        if ghost.is_empty() {
            return Err(Error::TruncationTooShort { need: 1, got: 0 });
        }
        Ok(WittVector { ghost })
    }

    pub fn ghost(&self) -> &[Q] {
        &self.ghost
    }

    pub fn truncation(&self) -> usize {
        self.ghost.len()
    }

    pub fn zero(n: usize) -> Self {
        WittVector { ghost: vec![Q::zero(); n.max(1)] }
    }

    pub fn one(n: usize) -> Self {
        Self::teichmuller(&q(1), n)
    }

    /// `[a]`, ghost `⟨a, a², a³, …⟩`.
    pub fn teichmuller(a: &Q, n: usize) -> Self {
        WittVector { ghost: (1..=n.max(1)).map(|i| pow(a, i)).collect() }
    }

    /// `⟨a⟩ = −[−a]`, ghost `⟨a, −a², a³, …⟩`.
    pub fn anti_teichmuller(a: &Q, n: usize) -> Self {
        let ghost = (1..=n.max(1)).map(|i| if i % 2 == 0 { -pow(a, i) } else { pow(a, i) }).collect();
        WittVector { ghost }
    }

    /// Ghost `⟨1, 0, 0, …⟩`, the vector whose series `σ` is `e^t`.
    pub fn xi(n: usize) -> Self {
        let mut ghost = vec![Q::zero(); n.max(1)];
        ghost[0] = q(1);
        WittVector { ghost }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.truncation() != other.truncation() {
            return Err(Error::TruncationMismatch { left: self.truncation(), right: other.truncation() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(WittVector { ghost: self.ghost.iter().zip(&other.ghost).map(|(a, b)| a + b).collect() })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(WittVector { ghost: self.ghost.iter().zip(&other.ghost).map(|(a, b)| a * b).collect() })
    }

    pub fn neg(&self) -> Self {
        WittVector { ghost: self.ghost.iter().map(|a| -a).collect() }
    }

    /// `x(f)`: substitute the ghost components for the power sums of `f`.
    /// Every power-sum index of `f` must be at most the truncation.
    pub fn value_at(&self, f: &SymFunc) -> Result<Q> {
        f.evaluate_ghost(&self.ghost)
    }

    /// Values on `e₁..e_n`, by Newton's identities `k e_k = Σ (−1)^{i−1} e_{k−i} p_i`.
    pub fn elementary_values(&self) -> Vec<Q> {
        let n = self.truncation();
        let mut e = vec![q(1)];
        for k in 1..=n {
            let mut s = Q::zero();
            for i in 1..=k {
                let term = &e[k - i] * &self.ghost[i - 1];
                if i % 2 == 1 {
                    s += term;
                } else {
                    s -= term;
                }
            }
            e.push(s / q(k as i64));
        }
        e.split_off(1)
    }

    /// Coefficients `1..n` of `(Σ x(e_i)(ε₁t)^i)^{ε₂}`.
    pub fn to_series(&self, norm: SeriesNormalization) -> Vec<Q> {
        let n = self.truncation();
        let mut full: Vec<Q> = std::iter::once(q(1)).chain(self.elementary_values()).collect();
        if norm.eps1_negative {
            for (i, c) in full.iter_mut().enumerate() {
                if i % 2 == 1 {
                    *c = -c.clone();
                }
            }
        }
        if norm.eps2_negative {
            full = inverse_full(&full, n);
        }
        full.split_off(1)
    }

    /// Inverse of [`WittVector::to_series`].
    pub fn from_series(coeffs: &[Q], norm: SeriesNormalization) -> Result<Self> {
        let n = coeffs.len();
        if n == 0 {
            return Err(Error::TruncationTooShort { need: 1, got: 0 });
        }
        let mut full: Vec<Q> = std::iter::once(q(1)).chain(coeffs.iter().cloned()).collect();
        if norm.eps2_negative {
            full = inverse_full(&full, n);
        }
        if norm.eps1_negative {
            for (i, c) in full.iter_mut().enumerate() {
                if i % 2 == 1 {
                    *c = -c.clone();
                }
            }
        }
        // (−1)^{k−1} p_k = k e_k − Σ_{i<k} (−1)^{i−1} e_{k−i} p_i
        let e = full;
        let mut ghost: Vec<Q> = Vec::with_capacity(n);
        for k in 1..=n {
            let mut s = &e[k] * q(k as i64);
            for i in 1..k {
                let term = &e[k - i] * &ghost[i - 1];
                if i % 2 == 1 {
                    s -= term;
                } else {
                    s += term;
                }
            }
            ghost.push(if k % 2 == 1 { s } else { -s });
        }
        Ok(WittVector { ghost })
    }

    /// The canonical series as a [`TruncSeries`].
    pub fn sigma(&self) -> TruncSeries {
        TruncSeries::new(self.to_series(SeriesNormalization::CANONICAL)).expect("nonempty")
    }

    /// Values on `θ₁..θ_n`.
    pub fn witt_coords(&self) -> Vec<Q> {
        let n = self.truncation();
        let mut t: Vec<Q> = Vec::with_capacity(n);
        for m in 1..=n {
            let mut s = self.ghost[m - 1].clone();
            for d in divisors(m).into_iter().filter(|&d| d < m) {
                s -= pow(&t[d - 1], m / d) * q(d as i64);
            }
            t.push(s / q(m as i64));
        }
        t
    }

    /// Inverse of [`WittVector::witt_coords`], via `g_m = Σ_{d∣m} d t_d^{m/d}`.
    pub fn from_witt_coords(ts: &[Q]) -> Result<Self> {
        if ts.is_empty() {
            return Err(Error::TruncationTooShort { need: 1, got: 0 });
        }
        let ghost = (1..=ts.len())
            .map(|m| divisors(m).into_iter().map(|d| pow(&ts[d - 1], m / d) * q(d as i64)).sum())
            .collect();
        Ok(WittVector { ghost })
    }

    /// `F_m`: ghost components `i ↦ g_{mi}`, truncation `⌊n/m⌋`.
    pub fn frobenius(&self, m: usize) -> Result<Self> {
        let n = self.truncation();
        if m == 0 || n / m == 0 {
            return Err(Error::TruncationTooShort { need: m.max(1), got: n });
        }
        Ok(WittVector { ghost: (1..=n / m).map(|i| self.ghost[m * i - 1].clone()).collect() })
    }

    /// The Λ-action `f(x)`, with ghost components `x(ψ_m ∘ f)`. The output
    /// truncation is `⌊n / k⌋` where `k` is the largest power-sum index of `f`.
    pub fn apply_symfunc(&self, f: &SymFunc) -> Result<Self> {
        let n = self.truncation();
        let k = f.max_index();
        let out = n.checked_div(k).unwrap_or(n);
        if out == 0 {
            return Err(Error::TruncationTooShort { need: k, got: n });
        }
        let ghost = (1..=out)
            .map(|m| f.evaluate_ghost(self.frobenius(m).expect("m ≤ n").ghost()))
            .collect::<Result<Vec<_>>>()?;
        Ok(WittVector { ghost })
    }

    /// The twist `x ↦ x ∘ ω`, which is multiplication by `⟨1⟩`.
    pub fn omega_twist(&self) -> Self {
        self.mul(&Self::anti_teichmuller(&q(1), self.truncation())).expect("same truncation")
    }

    fn membership(&self, tag: BasisTag, dom: Domain) -> Membership {
        let n = self.truncation();
        for w in 1..=n {
            for lambda in partitions_of(w) {
                let f = convert::from_basis(tag, &lambda, n).expect("weight within truncation");
                let v = self.value_at(&f).expect("indices within truncation");
                if !dom.contains(&v) {
                    return Membership { member: false, witness: Some((lambda, v)) };
                }
            }
        }
        Membership { member: true, witness: None }
    }

    /// Whether `x(m_λ) ∈ dom` for every `|λ| ≤ n`.
    pub fn member_w(&self, dom: Domain) -> Membership {
        self.membership(BasisTag::M, dom)
    }

    /// Whether `x(s_λ) ∈ dom` for every `|λ| ≤ n`.
    pub fn member_w_sch(&self, dom: Domain) -> Membership {
        self.membership(BasisTag::S, dom)
    }
}

/// For each `λ` with `1 ≤ |λ| ≤ max_weight`, the basis element `b_λ` as a
/// polynomial in the ghost symbols `a_i = ψ_i`. A Witt vector over `A` is
/// effective exactly when all of these take values in `A`.
pub fn effectivity_expressions(tag: BasisTag, max_weight: usize) -> Result<Vec<(Partition, SymFunc)>> {
    let mut out = Vec::new();
    for w in 1..=max_weight {
        for lambda in partitions_of(w) {
            let f = convert::from_basis(tag, &lambda, max_weight)?;
            out.push((lambda, f));
        }
    }
    Ok(out)
}

/// JSON form: `{"truncation": n, "ghost": [...]}`, or `"series"` with an
/// optional `"normalization"`, or `"witt"` for θ-coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WittJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ghost: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normalization: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witt: Option<Vec<String>>,
}

impl WittJson {
    pub fn from_witt(x: &WittVector) -> Self {
        WittJson {
            truncation: Some(x.truncation()),
            ghost: Some(x.ghost().iter().map(Q::to_string).collect()),
            ..Default::default()
        }
    }

    pub fn to_witt(&self) -> Result<WittVector> {
        let parse = |v: &Vec<String>| v.iter().map(|s| parse_q(s)).collect::<Result<Vec<_>>>();
        let x = match (&self.ghost, &self.series, &self.witt) {
            (Some(g), None, None) => WittVector::from_ghost(parse(g)?)?,
            (None, Some(s), None) => {
                let norm = match &self.normalization {
                    Some(n) => n.parse()?,
                    None => SeriesNormalization::CANONICAL,
                };
                WittVector::from_series(&parse(s)?, norm)?
            }
            (None, None, Some(w)) => WittVector::from_witt_coords(&parse(w)?)?,
            _ => return Err(Error::Parse("give exactly one of \"ghost\", \"series\" or \"witt\"".into())),
        };
        if let Some(n) = self.truncation {
            if n != x.truncation() {
                return Err(Error::TruncationMismatch { left: n, right: x.truncation() });
            }
        }
        Ok(x)
    }
}

/// `Σ [a_i]`, the sum of Teichmüller lifts, truncated at `n`.
pub fn teichmuller_sum(values: &[BigInt], n: usize) -> WittVector {
    values.iter().fold(WittVector::zero(n), |acc, a| {
        acc.add(&WittVector::teichmuller(&Q::from_integer(a.clone()), n)).expect("same truncation")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::rational::{factorial, q_frac};
    use num_traits::One;
    use proptest::prelude::*;

    fn g(v: &[i64]) -> WittVector {
        WittVector::from_ghost(v.iter().map(|&x| q(x)).collect()).unwrap()
    }

    #[test]
    fn ghost_examples() {
        assert_eq!(WittVector::teichmuller(&q(2), 4), g(&[2, 4, 8, 16]));
        assert_eq!(WittVector::anti_teichmuller(&q(1), 4), g(&[1, -1, 1, -1]));
        assert_eq!(WittVector::zero(3), g(&[0, 0, 0]));
    }

    #[test]
    fn teichmuller_values_on_monomials() {
        let a = q(3);
        let x = WittVector::teichmuller(&a, 5);
        for w in 1..=5 {
            for lambda in partitions_of(w) {
                let v = x.value_at(&SymFunc::m(&lambda, 5).unwrap()).unwrap();
                let expected = if lambda.len() == 1 { pow(&a, w) } else { q(0) };
                assert_eq!(v, expected, "m_{lambda}");
            }
        }
    }

    #[test]
    fn anti_teichmuller_values_on_schur() {
        let a = q(2);
        let x = WittVector::anti_teichmuller(&a, 5);
        for w in 1..=5 {
            for lambda in partitions_of(w) {
                let v = x.value_at(&SymFunc::s(&lambda, 5).unwrap()).unwrap();
                let expected = if lambda == Partition::column(w) { pow(&a, w) } else { q(0) };
                assert_eq!(v, expected, "s_{lambda}");
            }
        }
    }

    #[test]
    fn value_at_first_power_sum() {
        let x = g(&[7, 1, 2]);
        assert_eq!(x.value_at(&SymFunc::psi(1, 3).unwrap()).unwrap(), q(7));
        assert!(x.value_at(&SymFunc::psi(4, 4).unwrap()).is_err());
    }

    #[test]
    fn series_of_teichmuller_and_xi() {
        let alpha = q_frac(3, 5);
        let s = WittVector::teichmuller(&alpha, 4).to_series(SeriesNormalization::PLUS_PLUS);
        assert_eq!(s, vec![alpha, q(0), q(0), q(0)]);
        let s = WittVector::xi(6).to_series(SeriesNormalization::CANONICAL);
        let expected: Vec<Q> = (1..=6).map(|i| Q::new(BigInt::one(), factorial(i))).collect();
        assert_eq!(s, expected);
    }

    #[test]
    fn canonical_series_is_complete_values() {
        let x = WittVector::from_ghost(vec![q(2), q_frac(-1, 3), q(5), q(0), q_frac(7, 2)]).unwrap();
        let s = x.to_series(SeriesNormalization::CANONICAL);
        for (i, c) in s.iter().enumerate() {
            assert_eq!(*c, x.value_at(&SymFunc::h(i + 1, 5).unwrap()).unwrap());
        }
        let e = x.elementary_values();
        for (i, c) in e.iter().enumerate() {
            assert_eq!(*c, x.value_at(&SymFunc::e(i + 1, 5).unwrap()).unwrap());
        }
    }

    #[test]
    fn witt_coordinates() {
        assert_eq!(WittVector::teichmuller(&q(5), 6).witt_coords(), [q(5), q(0), q(0), q(0), q(0), q(0)]);
        assert_eq!(WittVector::zero(4).witt_coords(), vec![q(0); 4]);
        let t = q(3);
        let mut ts = vec![q(0); 8];
        ts[1] = t.clone();
        let x = WittVector::from_witt_coords(&ts).unwrap();
        for m in 1..=8 {
            let expected = if m % 2 == 0 { q(2) * pow(&t, m / 2) } else { q(0) };
            assert_eq!(x.ghost()[m - 1], expected);
        }
        let x = WittVector::from_ghost(vec![q(1), q(4), q_frac(1, 2), q(-3), q(2), q(0)]).unwrap();
        for (i, c) in x.witt_coords().iter().enumerate() {
            assert_eq!(*c, x.value_at(&SymFunc::theta(i + 1, 6).unwrap()).unwrap());
        }
    }

    #[test]
    fn frobenius_scales_indices() {
        let x = g(&[1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(x.frobenius(2).unwrap(), g(&[2, 4, 6]));
        assert_eq!(x.frobenius(1).unwrap(), x);
        assert_eq!(x.frobenius(3).unwrap().frobenius(2).unwrap(), x.frobenius(6).unwrap());
        assert!(x.frobenius(8).is_err());
    }

    #[test]
    fn lambda_action_examples() {
        let x = g(&[1, 5, -2, 3, 4, 1]);
        assert_eq!(x.apply_symfunc(&SymFunc::psi(1, 6).unwrap()).unwrap(), x);
        assert_eq!(x.apply_symfunc(&SymFunc::psi(2, 6).unwrap()).unwrap(), x.frobenius(2).unwrap());
        let t = WittVector::teichmuller(&q_frac(2, 3), 6);
        let d2 = SymFunc::d_p(2, 6).unwrap();
        assert_eq!(t.apply_symfunc(&d2).unwrap(), WittVector::zero(3));
    }

    #[test]
    fn membership_examples() {
        let two = g(&[2, 2, 2, 2]);
        assert!(two.member_w(Domain::Nat).member);
        let anti = WittVector::anti_teichmuller(&q(1), 4);
        assert!(anti.member_w_sch(Domain::Nat).member);
        let m = anti.member_w(Domain::Nat);
        assert!(!m.member);
        // ⟨1⟩(m_2) = a₂ = −1
        assert_eq!(m.witness, Some((part![2], q(-1))));
        let t = WittVector::teichmuller(&q(3), 5);
        assert!(t.member_w(Domain::Nat).member && t.member_w_sch(Domain::Nat).member);
    }

    #[test]
    fn eleven_monomial_values_at_two() {
        let x = g(&[2, 2, 2, 2]);
        let values: Vec<Q> =
            effectivity_expressions(BasisTag::M, 4).unwrap().iter().map(|(_, f)| x.value_at(f).unwrap()).collect();
        let mut sorted = values.clone();
        sorted.sort();
        let mut expected: Vec<Q> = [2, 2, 2, 2, 1, 2, 0, 2, 1, 0, 0].iter().map(|&v| q(v)).collect();
        expected.sort();
        assert_eq!(sorted, expected);
    }

    #[test]
    fn effectivity_small_weights() {
        let m2: Vec<SymFunc> = effectivity_expressions(BasisTag::M, 2).unwrap().into_iter().map(|p| p.1).collect();
        let parse = |s| crate::symfunc::text::parse_symfunc(s, 2).unwrap();
        assert_eq!(m2, vec![parse("a1"), parse("a2"), parse("(a1^2 - a2)/2")]);
        let s2: Vec<SymFunc> = effectivity_expressions(BasisTag::S, 2).unwrap().into_iter().map(|p| p.1).collect();
        assert_eq!(s2, vec![parse("a1"), parse("(a1^2 + a2)/2"), parse("(a1^2 - a2)/2")]);
        assert_eq!(effectivity_expressions(BasisTag::S, 1).unwrap().len(), 1);
    }

    #[test]
    fn json_forms() {
        let j: WittJson = serde_json::from_str(r#"{"truncation": 3, "ghost": ["2", "4", "8"]}"#).unwrap();
        assert_eq!(j.to_witt().unwrap(), WittVector::teichmuller(&q(2), 3));
        let j: WittJson = serde_json::from_str(r#"{"series": ["2", "0"], "normalization": "++"}"#).unwrap();
        assert_eq!(j.to_witt().unwrap(), WittVector::teichmuller(&q(2), 2));
        let j: WittJson = serde_json::from_str(r#"{"witt": ["2", "0", "0"]}"#).unwrap();
        assert_eq!(j.to_witt().unwrap(), WittVector::teichmuller(&q(2), 3));
        let j: WittJson = serde_json::from_str(r#"{"truncation": 2, "ghost": ["2", "4", "8"]}"#).unwrap();
        assert!(j.to_witt().is_err());
        let j: WittJson = serde_json::from_str(r#"{"ghost": ["1"], "witt": ["1"]}"#).unwrap();
        assert!(j.to_witt().is_err());
    }

    #[test]
    fn text_forms() {
        for n in SeriesNormalization::ALL {
            assert_eq!(n.to_string().parse::<SeriesNormalization>().unwrap(), n);
        }
        for d in [Domain::Nat, Domain::Int, Domain::NonnegRat, Domain::Rat] {
            assert_eq!(d.to_string().parse::<Domain>().unwrap(), d);
        }
        assert!("++-".parse::<SeriesNormalization>().is_err());
    }

    fn arb_q() -> impl Strategy<Value = Q> {
        (-20i64..20, 1i64..6).prop_map(|(n, d)| q_frac(n, d))
    }

    fn arb_witt(n: usize) -> impl Strategy<Value = WittVector> {
        proptest::collection::vec(arb_q(), n).prop_map(|v| WittVector::from_ghost(v).unwrap())
    }

    proptest! {
        #[test]
        fn series_round_trips(x in arb_witt(6)) {
            for norm in SeriesNormalization::ALL {
                let s = x.to_series(norm);
                prop_assert_eq!(WittVector::from_series(&s, norm).unwrap(), x.clone());
            }
            prop_assert_eq!(WittVector::from_witt_coords(&x.witt_coords()).unwrap(), x.clone());
        }

        #[test]
        fn omega_twist_is_multiplication_by_anti_one(x in arb_witt(5), c in proptest::collection::vec(arb_q(), 7)) {
            let parts = partitions_of(5);
            let f = SymFunc::from_terms(5, parts.into_iter().zip(c)).unwrap();
            prop_assert_eq!(x.value_at(&f.omega()).unwrap(), x.omega_twist().value_at(&f).unwrap());
        }
    }
}
