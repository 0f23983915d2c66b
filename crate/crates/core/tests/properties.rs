use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use compsign::compositions::{comp_counts, comp_polys};
use compsign::explorer::{construct_thm36, verify_thm34};
use compsign::nonperiodic::{bridge_check, check_nonperiodic, denom_poly, CertifierConfig};
use compsign::sets::SetSpec;
use compsign::signs::{sign_word, Sign, Verdict};
use compsign::sums::{cross_check, sk_fast, Route};

fn finite_set(max: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::btree_set(1..=max, 1..6).prop_map(|s| s.into_iter().collect())
}

fn any_set() -> impl Strategy<Value = SetSpec> {
    prop_oneof![
        finite_set(10).prop_map(|e| SetSpec::explicit(e, 400).unwrap()),
        proptest::collection::btree_set(1usize..=10, 0..4)
            .prop_map(|e| SetSpec::cofinite(e.into_iter().collect(), 400).unwrap()),
        (2usize..5).prop_map(|m| SetSpec::repunit(m, 400).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn four_routes_agree(set in any_set(), k in 0usize..=3, n in 0usize..=30) {
        let (grid, mismatches) = cross_check(&set, k, n).unwrap();
        prop_assert!(mismatches.is_empty(), "{:?}", mismatches);
        prop_assert_eq!(grid, Route::Direct.compute(&set, k, n).unwrap());
    }

    #[test]
    fn row_zero_positivity_propagates(set in any_set()) {
        let g = sk_fast(&set, 4, 80).unwrap();
        prop_assert!(g.propagation_holds());
    }

    #[test]
    fn first_column_is_fixed(set in any_set(), k in 0usize..5) {
        let g = sk_fast(&set, k, 3).unwrap();
        let expect = if k == 0 { BigInt::from(1) } else { BigInt::zero() };
        prop_assert_eq!(g.get(k, 0), &expect);
        let table = comp_polys(&set, 3).unwrap();
        let row0 = sk_fast(&set, 0, 3).unwrap();
        for n in 0..=3 {
            prop_assert_eq!(row0.get(0, n), &table.poly(n).eval_neg_one());
        }
    }

    #[test]
    fn initial_range_vanishes(m in 5usize..40, k in 0usize..3) {
        let g = sk_fast(&SetSpec::range(m, m).unwrap(), k, m).unwrap();
        for n in 2..=m {
            prop_assert!(g.get(0, n).is_zero());
        }
        for n in k + 3..=m {
            prop_assert!(g.get(k, n).is_zero());
        }
    }

    #[test]
    fn coefficients_count_compositions(set in any_set(), n in 0usize..40) {
        let table = comp_polys(&set, n).unwrap();
        let counts = comp_counts(&set, n).unwrap();
        for (p, c) in table.polys().iter().zip(&counts) {
            prop_assert!(p.coeffs().iter().all(|x| !x.is_negative()));
            prop_assert_eq!(&p.eval_one(), c);
        }
    }

    #[test]
    fn odd_sets_never_go_negative(odd in proptest::collection::btree_set(0usize..8, 1..5), k in 0usize..4) {
        let elems: Vec<usize> = odd.into_iter().map(|i| 2 * i + 1).collect();
        let set = SetSpec::explicit(elems, 200).unwrap();
        let g = sk_fast(&set, k, 120).unwrap();
        prop_assert!(!sign_word(&g, k, true).unwrap().contains(Sign::Neg));
        let counts = comp_counts(&set, 120).unwrap();
        for n in 0..=120 {
            prop_assert_eq!(g.get(0, n).abs(), counts[n].clone());
        }
    }

    #[test]
    fn cofinite_identity_holds(half in proptest::collection::btree_set(1usize..12, 0..4)) {
        let e: Vec<usize> = half.into_iter().map(|i| 2 * i).collect();
        let c = verify_thm34(&SetSpec::explicit(e, 200).unwrap(), 90, 2).unwrap();
        prop_assert!(c.passed, "{:?}", c);
    }

    #[test]
    fn subset_sum_sets_contain_base(odd in proptest::collection::btree_set(0usize..10, 2..4)) {
        let b: Vec<usize> = odd.into_iter().map(|i| 2 * i + 1).collect();
        if let Ok(a) = construct_thm36(&SetSpec::explicit(b.clone(), 200).unwrap()) {
            let a = a.finite_elements().unwrap();
            prop_assert_eq!(a.len(), (1 << b.len()) - 1);
            prop_assert!(b.iter().all(|x| a.contains(x)));
            prop_assert!(a.iter().any(|x| x % 2 == 0));
        }
    }

    #[test]
    fn certified_denominators_show_no_short_period(parts in finite_set(6)) {
        let set = SetSpec::explicit(parts, 100).unwrap();
        let p = denom_poly(&set).unwrap();
        prop_assume!(p.degree().unwrap_or(0) >= 2);
        let report = check_nonperiodic(&p, &CertifierConfig::default()).unwrap();
        if report.certified() {
            let f = bridge_check(&p, 2000, 50, 200).unwrap();
            prop_assert_eq!(f.verdict, Verdict::NoPeriodFound);
        }
    }
}
