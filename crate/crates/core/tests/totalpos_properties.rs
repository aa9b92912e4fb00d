use num_bigint::BigInt;
use proptest::prelude::*;
use witt_forge::bigwitt::{teichmuller_sum, SeriesNormalization, WittVector};
use witt_forge::partition::partitions_of;
use witt_forge::rational::{q, q_frac, Q};
use witt_forge::series::TruncSeries;
use witt_forge::symfunc::SymFunc;
use witt_forge::totalpos;
use witt_forge::Partition;

/// `Π(1 + a_i t)` padded with zero coefficients up to `t^n`.
fn product_series(roots: &[i64], n: usize) -> TruncSeries {
    let mut full = vec![q(1)];
    for &a in roots {
        let mut next = vec![q(0); full.len() + 1];
        for (i, c) in full.iter().enumerate() {
            next[i] += c;
            next[i + 1] += c * q(a);
        }
        full = next;
    }
    full.resize(n.max(full.len() - 1) + 1, q(0));
    TruncSeries::from_full(full).unwrap()
}

/// `s_{λ/μ}` as a polynomial in the `h_i`, by Leibniz expansion of the
/// Jacobi–Trudi matrix over symmetric functions.
fn jacobi_trudi(lambda: &Partition, mu: &Partition, bound: usize) -> SymFunc {
    let l = lambda.len();
    let part = |p: &Partition, k: usize| p.parts().get(k).copied().unwrap_or(0) as isize;
    let entry = |i: usize, j: usize| {
        let m = part(lambda, i) - part(mu, j) - i as isize + j as isize;
        match m {
            0 => SymFunc::one(bound),
            m if m < 0 => SymFunc::zero(bound),
            m => SymFunc::h(m as usize, bound).unwrap(),
        }
    };
    let mut total = SymFunc::zero(bound);
    let mut perm: Vec<usize> = (0..l).collect();
    permutations(&mut perm, 0, &mut |p| {
        let inversions = (0..l).flat_map(|i| (i + 1..l).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let term = (0..l).fold(SymFunc::one(bound), |acc, i| acc.mul(&entry(i, p[i])).unwrap());
        total = if inversions % 2 == 0 { &total + &term } else { &total - &term };
    });
    total
}

fn permutations(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, f);
        v.swap(k, i);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn real_rooted_polynomials_are_totally_nonnegative(roots in prop::collection::vec(0i64..=5, 0..=5)) {
        let s = product_series(&roots, 5);
        prop_assert!(totalpos::nonpositive_real_roots(&s).unwrap());
        prop_assert!(totalpos::toeplitz_minors_nonneg(&s, 4).unwrap().nonnegative);
        prop_assert!(totalpos::factorial_bound_check(&s).holds);
    }

    #[test]
    fn teichmuller_sums_are_real_rooted(roots in prop::collection::vec(1i64..=6, 0..=5)) {
        let values: Vec<BigInt> = roots.iter().map(|&a| BigInt::from(a)).collect();
        let x = teichmuller_sum(&values, 5);
        let s = TruncSeries::new(x.to_series(SeriesNormalization::PLUS_PLUS)).unwrap();
        prop_assert!(totalpos::nonpositive_real_roots(&s).unwrap());
        let mut sorted = values.clone();
        sorted.sort();
        prop_assert_eq!(totalpos::linear_factors(&s).unwrap(), Some(sorted));
    }

    #[test]
    fn minors_match_skew_schur_values(coeffs in prop::collection::vec((-5i64..=5, 1i64..=3), 4)) {
        let s = TruncSeries::new(coeffs.iter().map(|&(n, d)| q_frac(n, d)).collect()).unwrap();
        // the Witt vector whose h-values are the coefficients of s
        let x = WittVector::from_series(s.coeffs(), SeriesNormalization::CANONICAL).unwrap();
        for w in 1..=3 {
            for lambda in partitions_of(w) {
                for v in 0..=w {
                    for mu in partitions_of(v).into_iter().filter(|m| lambda.contains(m)) {
                        let minor = totalpos::skew_schur_witness(&s, &lambda, &mu).unwrap();
                        let value = x.value_at(&jacobi_trudi(&lambda, &mu, 4)).unwrap();
                        prop_assert_eq!(&minor, &value, "{}/{}", lambda, mu);
                    }
                }
            }
        }
    }

    #[test]
    fn toeplitz_verdict_matches_skew_minors(coeffs in prop::collection::vec(-2i64..=4, 3)) {
        // for order ≤ 3 and n = 3 every minor in the window is a skew Schur value
        let s = TruncSeries::new(coeffs.iter().map(|&c| q(c)).collect()).unwrap();
        let verdict = totalpos::toeplitz_minors_nonneg(&s, 3).unwrap().nonnegative;
        let mut all = true;
        for w in 1..=6 {
            for lambda in partitions_of(w).into_iter().filter(|l| l.len() <= 3 && l.first() + l.len() - 1 <= 3) {
                for v in 0..w {
                    for mu in partitions_of(v).into_iter().filter(|m| lambda.contains(m)) {
                        all &= totalpos::skew_schur_witness(&s, &lambda, &mu).unwrap() >= Q::from_integer(0.into());
                    }
                }
            }
        }
        prop_assert_eq!(verdict, all);
    }
}

#[test]
fn edrei_thoma_families_pass() {
    let vals = [q_frac(1, 2), q(1), q(3)];
    for g in &vals {
        for a in &vals {
            for b in &vals {
                let s =
                    totalpos::edrei_thoma_truncation(g, std::slice::from_ref(a), std::slice::from_ref(b), 6).unwrap();
                assert!(totalpos::toeplitz_minors_nonneg(&s, 4).unwrap().nonnegative);
            }
        }
    }
}

#[test]
fn accepted_without_linear_integer_factors() {
    // 1 + 3t + t² has two negative irrational roots: it passes the root test
    // but is not a product of factors 1 + a t with a ∈ ℕ
    let s = TruncSeries::new(vec![q(3), q(1)]).unwrap();
    assert!(totalpos::nonpositive_real_roots(&s).unwrap());
    assert_eq!(totalpos::linear_factors(&s).unwrap(), None);
}
