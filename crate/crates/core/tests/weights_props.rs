mod common;

use hwmlab::unitarity::{is_unitarizable, unitary_orbit, unitary_orbit_by_filter};
use hwmlab::weights::{abs_multiset, antidominant_rep, dot_act, dot_orbit, rho};
use hwmlab::{HalfInt, Weight, WeylElement};
use proptest::prelude::*;

#[test]
fn rho_is_half_the_positive_root_sum() {
    for n in 1..=6usize {
        let mut sum = vec![0i64; n];
        for i in 0..n {
            for j in i..n {
                sum[i] -= 1;
                sum[j] -= 1;
            }
            for l in i + 1..n {
                sum[i] += 1;
                sum[l] -= 1;
            }
        }
        let expect: Vec<HalfInt> = sum.iter().map(|&s| HalfInt::from_doubled(s)).collect();
        assert_eq!(rho(n).unwrap().coords, expect);
    }
}

#[test]
fn group_orders() {
    let mut fact = 1u128;
    for n in 1..=5usize {
        fact *= n as u128;
        assert_eq!(WeylElement::all(n).len() as u128, (1u128 << n) * fact);
        assert_eq!(WeylElement::order(n), (1u128 << n) * fact);
    }
}

fn element(n: usize) -> impl Strategy<Value = WeylElement> {
    (Just((0..n).collect::<Vec<usize>>()).prop_shuffle(), prop::collection::vec(prop::bool::ANY, n))
        .prop_map(|(p, s)| WeylElement::new(p, s.into_iter().map(|b| if b { -1 } else { 1 }).collect()).unwrap())
}

fn weight_and_pair() -> impl Strategy<Value = (Weight, WeylElement, WeylElement)> {
    (1usize..=4).prop_flat_map(|n| {
        (prop::collection::vec(-4i64..8, n), element(n), element(n))
            .prop_map(|(v, a, b)| (Weight::single(&v).unwrap(), a, b))
    })
}

proptest! {
    #[test]
    fn dot_action_is_a_group_action((lam, a, b) in weight_and_pair()) {
        let lhs = dot_act(&a.compose(&b), &lam, 0).unwrap();
        let rhs = dot_act(&a, &dot_act(&b, &lam, 0).unwrap(), 0).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(dot_act(&WeylElement::identity(lam.rank()), &lam, 0).unwrap(), lam.clone());
        let back = dot_act(&a.inverse(), &dot_act(&a, &lam, 0).unwrap(), 0).unwrap();
        prop_assert_eq!(back, lam.clone());
        prop_assert_eq!(abs_multiset(&dot_act(&a, &lam, 0).unwrap()), abs_multiset(&lam));
    }

    #[test]
    fn antidominant_rep_lies_in_the_orbit(v in prop::collection::vec(-3i64..7, 1..=3)) {
        let lam = Weight::single(&v).unwrap();
        if let Ok(rep) = antidominant_rep(&lam) {
            prop_assert!(dot_orbit(&lam, 0).unwrap().contains(&rep));
        }
    }
}

#[test]
fn closed_form_orbits_match_the_filter_small() {
    for n in 1..=3 {
        for v in common::regular_antidominant(n, n as i64 + 5) {
            let lam = Weight::single(&v).unwrap();
            let mut closed = unitary_orbit(&lam, 0).unwrap().weights();
            closed.sort();
            assert_eq!(closed, unitary_orbit_by_filter(&lam, 0).unwrap(), "{lam}");
            assert!(closed.iter().all(|w| is_unitarizable(w, 0)));
        }
    }
}
