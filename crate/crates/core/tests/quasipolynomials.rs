use golomb_core::golomb::count_golomb_rulers;
use golomb_core::poly::Polynomial;
use golomb_core::quasipoly::*;
use golomb_core::rational::{frac, int};
use golomb_core::{Budget, Error};
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn held_out_values_match_enumeration() {
    let mut budget = Budget::unlimited();
    for (m, extra) in [(1usize, 40u64), (2, 40), (3, 60)] {
        let q = golomb_quasipolynomial(m, None, &mut budget).unwrap();
        let first_unused = interpolation_range(m, q.period()).end() + 1;
        for t in first_unused..first_unused + extra {
            let brute = count_golomb_rulers(m, t, &mut budget).unwrap();
            assert_eq!(q.evaluate(t as i64), int(brute as i64), "m={m} t={t}");
        }
    }
}

#[test]
fn g3_at_small_and_negative_arguments() {
    let q = golomb_quasipolynomial(3, Some(12), &mut Budget::unlimited()).unwrap();
    assert_eq!(q.evaluate(0), int(10));
    assert_eq!(q.evaluate(-1), int(6));
    assert_eq!(q.evaluate(-12), q.constituent(0).eval_int(-12));
    // Values at t = 1..5 are 0 even though constituents are not.
    for t in 1..=5 {
        assert_eq!(q.evaluate(t), int(0), "t={t}");
    }
    assert_eq!(q.degree(), Some(2));
    assert!(q.constituents().iter().all(|c| c.coeff(2) == frac(1, 2)));
}

#[test]
fn reciprocity_small_m() {
    let mut budget = Budget::unlimited();
    for m in 1..=3 {
        let report = reciprocity_check_golomb(m, 0..=8, &mut budget).unwrap();
        assert!(report.all_hold(), "m={m}: {:?}", report.rows);
        assert_eq!(report.value_at_zero(), int(report.regions as i64));
    }
}

#[test]
fn leading_coefficient_check_reports_the_residue() {
    // A period-1 fit through g_3 on 1..=3 is identically 0.
    let err = golomb_quasipolynomial(3, Some(1), &mut Budget::unlimited()).unwrap_err();
    assert_eq!(err, Error::LeadingCoefficient { residue: 0, found: "0".into(), expected: "1/2".into() });
}

fn arb_quasi() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (0usize..4, 1usize..5)
        .prop_flat_map(|(d, p)| (Just(d), prop::collection::vec(prop::collection::vec(-20i64..20, d + 1), p)))
}

proptest! {
    #[test]
    fn interpolation_recovers_integer_quasipolynomials((d, cs) in arb_quasi(), extra in 0u64..3) {
        let q = Quasipolynomial::new(cs.iter().map(|c| Polynomial::from_ints(c)).collect()).unwrap();
        let p = q.period();
        let n = p * (d as u64 + 1 + extra);
        let values = (1..=n as i64).map(|t| (t, q.evaluate(t).to_integer()));
        let back = interpolate(values, d, p).unwrap();
        for t in -30..30 {
            prop_assert_eq!(back.evaluate(t), q.evaluate(t));
        }
        prop_assert_eq!(back.with_period(2 * p).unwrap().minimal_period(), q.minimal_period());
    }

    #[test]
    fn negative_arguments_use_the_nonnegative_residue(t in -500i64..500, p in 1u64..13) {
        let q = Quasipolynomial::new((0..p).map(|i| Polynomial::constant(int(i as i64))).collect()).unwrap();
        prop_assert_eq!(q.evaluate(t), int(t.rem_euclid(p as i64)));
    }

    #[test]
    fn inconsistent_data_is_rejected(bump in 1i64..5, at in 3i64..7) {
        let values = (1..=6i64).map(|t| (t, BigInt::from(t * t + if t == at { bump } else { 0 })));
        let r = interpolate(values, 1, 1);
        let inconsistent = matches!(r, Err(Error::Inconsistent { .. }));
        prop_assert!(inconsistent);
    }
}
