//! Membership in `Λ_ℕ` (monomial-positive) and `Sch` (Schur-positive).

use serde::Serialize;

use super::tensor::{TensorKey, TensorSymFunc};
use super::{convert, BasisTag, SymFunc, Terms};
use crate::partition::Partition;
use crate::rational::{is_nonneg, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositivityReport {
    pub basis: BasisTag,
    /// Every coefficient is `≥ 0`.
    pub positive: bool,
    /// Every coefficient is an integer.
    pub integral: bool,
    /// The first negative coefficient in partition order.
    #[serde(serialize_with = "ser_witness")]
    pub witness: Option<(Partition, Q)>,
}

fn ser_witness<S: serde::Serializer>(w: &Option<(Partition, Q)>, s: S) -> Result<S::Ok, S::Error> {
    w.as_ref().map(|(l, c)| serde_json::json!({"partition": l, "coef": c.to_string()})).serialize(s)
}

impl PositivityReport {
    fn from_coeffs(basis: BasisTag, coeffs: &Terms) -> Self {
        let witness = coeffs.iter().find(|(_, c)| !is_nonneg(c)).map(|(l, c)| (l.clone(), c.clone()));
        PositivityReport {
            basis,
            positive: witness.is_none(),
            integral: coeffs.values().all(|c| c.is_integer()),
            witness,
        }
    }

    /// Nonnegative and integral.
    pub fn is_effective(&self) -> bool {
        self.positive && self.integral
    }
}

pub fn is_monomial_positive(f: &SymFunc) -> PositivityReport {
    PositivityReport::from_coeffs(BasisTag::M, &convert::to_basis_coeffs(BasisTag::M, f))
}

pub fn is_schur_positive(f: &SymFunc) -> PositivityReport {
    PositivityReport::from_coeffs(BasisTag::S, &convert::to_basis_coeffs(BasisTag::S, f))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPositivityReport {
    pub positive: bool,
    pub integral: bool,
    pub witness: Option<(TensorKey, Q)>,
}

/// Positivity of the coefficients of `T` in `b⊗b`.
pub fn tensor_positivity(t: &TensorSymFunc, tag: BasisTag) -> TensorPositivityReport {
    let coeffs = t.to_basis_coeffs(tag);
    let witness = coeffs.iter().find(|(_, c)| !is_nonneg(c)).map(|(k, c)| (k.clone(), c.clone()));
    TensorPositivityReport { positive: witness.is_none(), integral: coeffs.values().all(|c| c.is_integer()), witness }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::rational::q;

    const B: usize = 12;

    #[test]
    fn theta5_signs() {
        let t5 = SymFunc::theta(5, B).unwrap();
        let report = is_schur_positive(&t5);
        assert!(!report.positive);
        let (w, c) = report.witness.unwrap();
        assert!([part![2, 1, 1, 1], part![2, 2, 1], part![3, 1, 1], part![3, 2], part![4, 1]].contains(&w));
        assert_eq!(c, q(-1));
        let report = is_schur_positive(&-&t5);
        assert!(report.positive && report.integral);
    }

    #[test]
    fn d3_monomial_positive() {
        let d3 = SymFunc::d_p(3, B).unwrap();
        assert!(is_monomial_positive(&d3).is_effective());
        let m = convert::to_basis_coeffs(BasisTag::M, &d3);
        assert_eq!(m, [(part![2, 1], q(1)), (part![1, 1, 1], q(2))].into());
    }

    #[test]
    fn non_integral_is_reported() {
        let half_psi = SymFunc::psi(1, B).unwrap().scale(&crate::rational::q_frac(1, 2));
        let r = is_schur_positive(&half_psi);
        assert!(r.positive && !r.integral && !r.is_effective());
    }
}
