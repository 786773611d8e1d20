mod common;

use common::{mul, partitions, peel, schur, sym_sym2};
use hwmlab::ktypes::{
    distinguished_ktype, g_map, g_map_iterate, j_invariant, lr_coefficient, lr_coefficients,
    upplus_decomposition, verma_ktype_multiplicity, KTypeSignature,
};
use proptest::prelude::*;

#[test]
fn lr_matches_schur_products() {
    for n in 1..=3 {
        for a in 0..=4 {
            for b in 0..=3 {
                for mu in partitions(a, n) {
                    for nu in partitions(b, n) {
                        let expect = peel(mul(&schur(&mu, n), &schur(&nu, n)), n);
                        let got = lr_coefficients(
                            &KTypeSignature::new(mu.clone()).unwrap(),
                            &KTypeSignature::new(nu.clone()).unwrap(),
                        )
                        .unwrap();
                        assert_eq!(got.len(), expect.len(), "{mu:?} x {nu:?}");
                        for (sig, c) in got {
                            assert_eq!(expect[sig.weight()], c as i64, "{mu:?} x {nu:?} -> {sig}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn upplus_matches_plethysm_character() {
    for n in 1..=3 {
        let deg = 4;
        let expect = peel(sym_sym2(n, deg), n);
        let got = upplus_decomposition(n, deg);
        assert_eq!(got.len(), expect.len());
        for (p, c) in got {
            assert_eq!(expect[p.parts()], c as i64);
        }
    }
}

#[test]
fn verma_multiplicities_match_characters() {
    for n in 1..=3 {
        let deg = 3;
        let chi = sym_sym2(n, deg);
        for size in 0..=3 {
            for lam in partitions(size, n) {
                let prod = peel(mul(&chi, &schur(&lam, n)), n);
                let top = size + 2 * deg as i64;
                for s in 0..=top {
                    for sigma in partitions(s, n) {
                        let got = verma_ktype_multiplicity(
                            &lam,
                            &KTypeSignature::new(sigma.clone()).unwrap(),
                            deg,
                        );
                        let expect = prod.get(&sigma).copied().unwrap_or(0);
                        match got {
                            Ok(m) => assert_eq!(m as i64, expect, "{sigma:?} in N({lam:?})"),
                            Err(_) => assert!(s > top),
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn determinant_twists_are_transparent() {
    let a = KTypeSignature::new(vec![2, 0, -1]).unwrap();
    let b = KTypeSignature::new(vec![1, 1, -2]).unwrap();
    let shifted = lr_coefficients(&a.twist(3), &b.twist(-1)).unwrap();
    let base = lr_coefficients(&a, &b).unwrap();
    assert_eq!(shifted.len(), base.len());
    for (s, c) in base {
        assert_eq!(shifted[&s.twist(2)], c);
    }
}

fn dominant(n: usize, max: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0..=max, n).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

proptest! {
    #[test]
    fn lr_is_symmetric(mu in dominant(3, 4), nu in dominant(3, 3)) {
        let total: i64 = mu.iter().sum::<i64>() + nu.iter().sum::<i64>();
        for lam in partitions(total, 3) {
            prop_assert_eq!(lr_coefficient(&lam, &mu, &nu), lr_coefficient(&lam, &nu, &mu));
        }
    }

    #[test]
    fn g_map_preserves_j_and_reaches_closed_form(n in 1usize..=6, seed in dominant(6, 10)) {
        let lam: Vec<i64> = seed[..n].to_vec();
        let j = j_invariant(&lam);
        prop_assert_eq!(j_invariant(&g_map(&lam).unwrap()), j);
        let mut expect = vec![lam[0]; j];
        expect.extend(std::iter::repeat_n(lam[0] - 1, n - j));
        prop_assert_eq!(g_map_iterate(&lam, n - 1).unwrap(), expect);
    }

    #[test]
    fn distinguished_ktype_occurs_in_verma(seed in dominant(4, 8), n in 1usize..=4) {
        let lam: Vec<i64> = seed[..n].to_vec();
        let sigma = distinguished_ktype(&lam).unwrap();
        let degree = ((sigma.size() - lam.iter().sum::<i64>()).max(0) / 2) as usize;
        prop_assert!(verma_ktype_multiplicity(&lam, &sigma, degree).unwrap() >= 1);
    }
}
