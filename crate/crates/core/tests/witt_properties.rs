use num_bigint::BigInt;
use proptest::prelude::*;
use witt_forge::bigwitt::{teichmuller_sum, Domain, SeriesNormalization, WittVector};
use witt_forge::partition::partitions_of;
use witt_forge::ptypical::{self, PTypGhost};
use witt_forge::rational::{q, q_frac, Q};
use witt_forge::symfunc::{convert, BasisTag, SymFunc};

const N: usize = 6;

fn arb_q() -> impl Strategy<Value = Q> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| q_frac(n, d))
}

fn arb_witt() -> impl Strategy<Value = WittVector> {
    prop::collection::vec(arb_q(), N).prop_map(|c| WittVector::from_witt_coords(&c).unwrap())
}

fn arb_nat_sum(max_len: usize) -> impl Strategy<Value = Vec<BigInt>> {
    prop::collection::vec((0i64..=4).prop_map(BigInt::from), 0..=max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(x in arb_witt(), y in arb_witt(), z in arb_witt()) {
        prop_assert_eq!(x.add(&y).unwrap(), y.add(&x).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
        prop_assert_eq!(x.add(&y).unwrap().add(&z).unwrap(), x.add(&y.add(&z).unwrap()).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
        prop_assert_eq!(
            x.mul(&y.add(&z).unwrap()).unwrap(),
            x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap()
        );
        prop_assert_eq!(x.add(&WittVector::zero(N)).unwrap(), x.clone());
        prop_assert_eq!(x.mul(&WittVector::teichmuller(&q(1), N)).unwrap(), x.clone());
    }

    #[test]
    fn w_membership_implies_schur_membership(values in prop::collection::vec(-3i64..=4, 0..4), ghost in prop::collection::vec(-3i64..=6, N)) {
        let lifts = teichmuller_sum(&values.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>(), N);
        let raw = WittVector::from_ghost(ghost.into_iter().map(q).collect()).unwrap();
        for x in [lifts, raw] {
            if x.member_w(Domain::Nat).member {
                prop_assert!(x.member_w_sch(Domain::Nat).member);
            }
        }
    }

    #[test]
    fn nat_closure(a in arb_nat_sum(4), b in arb_nat_sum(4)) {
        let x = teichmuller_sum(&a, N);
        let y = teichmuller_sum(&b, N);
        prop_assert!(x.member_w(Domain::Nat).member);
        prop_assert!(x.add(&y).unwrap().member_w(Domain::Nat).member);
        prop_assert!(x.mul(&y).unwrap().member_w(Domain::Nat).member);
    }

    #[test]
    fn additive_action_identity(x in arb_witt(), y in arb_witt(), tag in prop::sample::select(BasisTag::ALL.to_vec()), w in 1usize..=4, idx in any::<prop::sample::Index>()) {
        let shapes = partitions_of(w);
        let f = convert::from_basis(tag, idx.get(&shapes), 12).unwrap();
        let lhs = x.add(&y).unwrap().apply_symfunc(&f).unwrap();
        let delta = f.coproduct_add();
        for (m, value) in lhs.ghost().iter().enumerate() {
            let (fx, fy) = (x.frobenius(m + 1).unwrap(), y.frobenius(m + 1).unwrap());
            prop_assert_eq!(value, &delta.evaluate_ghost(fx.ghost(), fy.ghost()).unwrap());
        }
    }

    #[test]
    fn coordinate_round_trips(coords in prop::collection::vec(arb_q(), N)) {
        let x = WittVector::from_witt_coords(&coords).unwrap();
        prop_assert_eq!(x.witt_coords(), coords);
        for norm in SeriesNormalization::ALL {
            let s = x.to_series(norm);
            prop_assert_eq!(WittVector::from_series(&s, norm).unwrap(), x.clone());
        }
    }

    #[test]
    fn omega_twist_is_multiplication_by_anti_teichmuller_one(x in arb_witt(), w in 1usize..=4, idx in any::<prop::sample::Index>()) {
        let twisted = x.omega_twist();
        prop_assert_eq!(twisted.clone(), x.mul(&WittVector::anti_teichmuller(&q(1), N)).unwrap());
        let shapes = partitions_of(w);
        let f = SymFunc::s(idx.get(&shapes), 12).unwrap();
        prop_assert_eq!(twisted.value_at(&f).unwrap(), x.value_at(&f.omega()).unwrap());
    }

    #[test]
    fn ptypical_nat_closure(p in prop::sample::select(vec![2usize, 3]), a in prop::collection::vec(0i64..=3, 1..4), b in prop::collection::vec(0i64..=3, 1..4)) {
        let lift = |vals: &[i64]| {
            vals.iter().fold(PTypGhost::new(p, 2, vec![q(0); 3]).unwrap(), |acc, &v| {
                acc.add(&PTypGhost::teichmuller(p, 2, &q(v)).unwrap()).unwrap()
            })
        };
        let (x, y) = (lift(&a), lift(&b));
        prop_assert!(ptypical::member(&x, Domain::Nat).member);
        prop_assert!(ptypical::member(&x.add(&y).unwrap(), Domain::Nat).member);
        prop_assert!(ptypical::member(&x.mul(&y).unwrap(), Domain::Nat).member);
    }

    #[test]
    fn ptypical_membership_is_antitone_in_k(p in prop::sample::select(vec![2usize, 3]), ghost in prop::collection::vec(0i64..=9, 2..4), extra in 0i64..=30) {
        let k = ghost.len() - 1;
        let g = PTypGhost::new(p, k, ghost.iter().map(|&v| q(v)).collect()).unwrap();
        let mut longer = g.components().to_vec();
        longer.push(q(extra));
        let h = PTypGhost::new(p, k + 1, longer).unwrap();
        let (short_member, long_member) = (
            ptypical::member(&g, Domain::Nat).member,
            ptypical::member(&h, Domain::Nat).member,
        );
        prop_assert!(short_member || !long_member);
        if long_member {
            let projected = ptypical::ghost_to_grid(&h).project().unwrap();
            prop_assert_eq!(&projected, &ptypical::ghost_to_grid(&g));
            prop_assert!(projected.entries().iter().all(|(_, v)| Domain::Nat.contains(v)));
        }
    }
}

#[test]
fn series_normalizations_of_a_teichmuller_lift() {
    let x = WittVector::teichmuller(&q(2), 4);
    // Σ e_i t^i for [2] is 1 + 2t
    assert_eq!(x.to_series(SeriesNormalization::PLUS_PLUS), vec![q(2), q(0), q(0), q(0)]);
    // Σ h_i t^i is 1/(1 − 2t)
    assert_eq!(x.to_series(SeriesNormalization::CANONICAL), vec![q(2), q(4), q(8), q(16)]);
}
