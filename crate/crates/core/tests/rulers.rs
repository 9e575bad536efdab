use std::collections::BTreeSet;

use golomb_core::golomb::*;
use golomb_core::Budget;
use proptest::prelude::*;

/// Positive compositions of `t` into `m` parts, generated by choosing cut points.
fn compositions(m: usize, t: u64) -> Vec<Vec<u64>> {
    fn go(m: usize, t: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if m == 1 {
            if t >= 1 {
                acc.push(t);
                out.push(acc.clone());
                acc.pop();
            }
            return;
        }
        for x in 1..t {
            acc.push(x);
            go(m - 1, t - x, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if m >= 1 {
        go(m, t, &mut Vec::new(), &mut out);
    }
    out
}

/// Marks at prefix sums; Golomb iff all pairwise differences differ.
fn golomb_by_marks(gaps: &[u64]) -> bool {
    let mut marks = vec![0u64];
    for g in gaps {
        marks.push(marks.last().unwrap() + g);
    }
    let mut seen = BTreeSet::new();
    for i in 0..marks.len() {
        for j in i + 1..marks.len() {
            if !seen.insert(marks[j] - marks[i]) {
                return false;
            }
        }
    }
    true
}

#[test]
fn counts_match_brute_force() {
    let mut budget = Budget::unlimited();
    for m in 1..=5 {
        for t in 0..=25 {
            let expected = compositions(m, t).iter().filter(|z| golomb_by_marks(z)).count() as u64;
            assert_eq!(count_golomb_rulers(m, t, &mut budget).unwrap(), expected, "m={m} t={t}");
        }
    }
}

#[test]
fn enumeration_is_lexicographic_and_complete() {
    let mut budget = Budget::unlimited();
    for (m, t) in [(3, 12), (4, 17), (5, 25)] {
        let got: Vec<Vec<u64>> =
            enumerate_golomb_rulers(m, t, &mut budget).unwrap().iter().map(|r| r.gaps().to_vec()).collect();
        let want: Vec<Vec<u64>> = compositions(m, t).into_iter().filter(|z| golomb_by_marks(z)).collect();
        assert_eq!(got, want);
    }
}

#[test]
fn first_gap_split_partitions_the_count() {
    let mut budget = Budget::unlimited();
    for (m, t) in [(3, 20), (4, 22)] {
        let total: u64 = (1..=t).map(|g| count_with_first_gap(m, t, Some(g), &mut budget).unwrap()).sum();
        assert_eq!(total, count_golomb_rulers(m, t, &mut budget).unwrap());
    }
}

#[test]
fn complement_pairs_make_counts_even() {
    let mut budget = Budget::unlimited();
    for m in 2..=5 {
        for t in 0..=24 {
            let rulers = enumerate_golomb_rulers(m, t, &mut budget).unwrap();
            assert_eq!(rulers.len() % 2, 0, "m={m} t={t}");
            let set: BTreeSet<Vec<u64>> = rulers.iter().map(|r| r.gaps().to_vec()).collect();
            for r in &rulers {
                let c = complement(r);
                assert_ne!(c.gaps(), r.gaps());
                assert!(set.contains(c.gaps()));
            }
        }
    }
}

#[test]
fn optimal_lengths_agree_with_brute_force() {
    let mut budget = Budget::unlimited();
    for m in 1..=5 {
        let brute = (1..).find(|&t| compositions(m, t).iter().any(|z| golomb_by_marks(z))).unwrap();
        assert_eq!(optimal_length(m, 100, &mut budget).unwrap(), brute, "m={m}");
    }
    assert!(optimal_length(4, 10, &mut budget).is_err());
}

proptest! {
    #[test]
    fn both_golomb_tests_agree(gaps in prop::collection::vec(1u64..12, 1..7)) {
        let r = Ruler::new(gaps.clone()).unwrap();
        prop_assert_eq!(is_golomb(&r), golomb_by_marks(&gaps));
        prop_assert_eq!(is_golomb(&r), has_distinct_differences(&r));
    }

    #[test]
    fn markings_round_trip(gaps in prop::collection::vec(1u64..1000, 1..8)) {
        let r = Ruler::new(gaps).unwrap();
        let marks: Vec<u64> = r.markings().iter().map(|&x| x as u64).collect();
        prop_assert_eq!(Ruler::from_markings(&marks).unwrap(), r.clone());
        prop_assert_eq!(complement(&complement(&r)), r.clone());
        prop_assert_eq!(is_golomb(&complement(&r)), is_golomb(&r));
    }

    #[test]
    fn golomb_rulers_have_all_differences_distinct(gaps in prop::collection::vec(1u64..20, 2..6)) {
        let r = Ruler::new(gaps).unwrap();
        let m = r.m();
        let marks = r.markings();
        let mut diffs: Vec<u128> = Vec::new();
        for i in 0..=m {
            for j in i + 1..=m {
                diffs.push(marks[j] - marks[i]);
            }
        }
        diffs.sort_unstable();
        diffs.dedup();
        prop_assert_eq!(diffs.len() == m * (m + 1) / 2, is_golomb(&r));
    }
}
