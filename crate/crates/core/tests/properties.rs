use proptest::prelude::*;
use proptest::sample::subsequence;

use sma_core::checker::{column_sums, verify_same_row_pairs, verify_shiftable, verify_sma};
use sma_core::composer::{feasible, generate};
use sma_core::even::build_even;
use sma_core::format::{parse_csv, parse_json, to_csv, to_json};
use sma_core::SignedArray;

fn even(lo: usize, hi: usize) -> impl Strategy<Value = usize> {
    (lo / 2..=hi / 2).prop_map(|h| 2 * h)
}

fn feasible_size() -> impl Strategy<Value = (usize, usize)> {
    (3usize..=24, even(2, 24)).prop_filter("feasible", |&(m, n)| feasible(m, n).unwrap())
}

fn sorted(a: &SignedArray) -> Vec<i64> {
    let mut v = a.entries().to_vec();
    v.sort_unstable();
    v
}

fn permute_cols(a: &SignedArray, perm: &[usize]) -> SignedArray {
    let rows: Vec<Vec<i64>> = a.row_iter().map(|r| perm.iter().map(|&j| r[j]).collect()).collect();
    SignedArray::from_rows(&rows).unwrap()
}

fn permute_rows(a: &SignedArray, perm: &[usize]) -> SignedArray {
    let rows: Vec<Vec<i64>> = perm.iter().map(|&i| a.row(i).to_vec()).collect();
    SignedArray::from_rows(&rows).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shift_composes((m, n) in feasible_size(), j in 0u64..500, k in 0u64..500) {
        let a = generate(m, n).unwrap();
        prop_assert_eq!(a.shift(j).unwrap().shift(k).unwrap(), a.shift(j + k).unwrap());
    }

    #[test]
    fn shift_keeps_sums_of_shiftable(m in even(4, 16), n in even(4, 16), k in 0u64..=100) {
        let a = build_even(m, n).unwrap();
        let s = a.shift(k).unwrap();
        prop_assert_eq!(s.row_sums(), a.row_sums());
        prop_assert_eq!(column_sums(&s), column_sums(&a));
    }

    #[test]
    fn stacking_keeps_multiset((m, n) in feasible_size(), k in 0u64..50) {
        let a = generate(m, n).unwrap();
        let b = a.shift(k).unwrap().negate();
        let mut expected = [a.entries(), b.entries()].concat();
        expected.sort_unstable();
        prop_assert_eq!(sorted(&a.hstack(&b).unwrap()), expected.clone());
        prop_assert_eq!(sorted(&a.vstack(&b).unwrap()), expected);
    }

    #[test]
    fn negate_flips_row_sums(rows in prop::collection::vec(prop::collection::vec(-50i64..50, 3), 1..6)) {
        let a = SignedArray::from_rows(&rows).unwrap();
        let neg: Vec<i64> = a.row_sums().iter().map(|s| -s).collect();
        prop_assert_eq!(a.negate().row_sums(), neg);
        prop_assert_eq!(verify_sma(&a.negate()).passed(), verify_sma(&a).passed());
    }

    #[test]
    fn checks_ignore_column_order((m, n) in feasible_size(), seed in any::<u64>()) {
        let a = generate(m, n).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let p = permute_cols(&a, &perm);
        prop_assert!(verify_sma(&p).passed());
        prop_assert!(verify_same_row_pairs(&p).passed());
        prop_assert!(verify_sma(&a.negate()).passed());
    }

    #[test]
    fn same_row_ignores_row_order((m, n) in feasible_size(), keep in subsequence((0..24usize).collect::<Vec<_>>(), 0..24)) {
        let a = generate(m, n).unwrap();
        // move the chosen rows to the front, keep the rest after them
        let mut perm: Vec<usize> = keep.into_iter().filter(|&i| i < m).rev().collect();
        let rest: Vec<usize> = (0..m).filter(|i| !perm.contains(i)).collect();
        perm.extend(rest);
        prop_assert!(verify_same_row_pairs(&permute_rows(&a, &perm)).passed());
    }

    #[test]
    fn shiftable_profiles_survive_shift(m in even(4, 12), n in even(4, 12), k in 0u64..1000) {
        let a = build_even(m, n).unwrap();
        prop_assert!(verify_shiftable(&a).unwrap().passed());
        prop_assert_eq!(column_sums(&a.shift(k).unwrap()), column_sums(&a));
    }

    #[test]
    fn serialization_round_trips((m, n) in (3usize..=40, even(2, 40)).prop_filter("feasible", |&(m, n)| feasible(m, n).unwrap())) {
        let a = generate(m, n).unwrap();
        prop_assert_eq!(&parse_csv(&to_csv(&a)).unwrap(), &a);
        prop_assert_eq!(&parse_json(&to_json(&a)).unwrap(), &a);
    }
}

#[test]
fn generate_is_deterministic() {
    for (m, n) in [(7, 8), (9, 10), (13, 6), (20, 20), (35, 2)] {
        assert_eq!(generate(m, n).unwrap(), generate(m, n).unwrap());
    }
}
