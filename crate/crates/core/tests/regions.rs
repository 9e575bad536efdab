use std::collections::BTreeSet;

use golomb_core::arrangement::golomb_hyperplanes;
use golomb_core::golomb::{is_golomb, Ruler};
use golomb_core::golombgraph::*;
use golomb_core::mixedgraph::is_acyclic_mixed;
use golomb_core::quasipoly::for_each_weak_composition;
use golomb_core::{Budget, Error};
use proptest::prelude::*;

#[test]
fn multiplicity_one_exactly_for_golomb_rulers() {
    let mut budget = Budget::unlimited();
    for m in 1..=4 {
        let index = RegionIndex::new(m, &mut budget).unwrap();
        for t in 1..=20 {
            for_each_weak_composition(m, t, |z| {
                if z.contains(&0) {
                    return;
                }
                let r = Ruler::new(z.to_vec()).unwrap();
                let seeded = multiplicity(&r, &mut Budget::unlimited()).unwrap();
                assert_eq!(seeded, index.multiplicity(z), "{z:?}");
                assert_eq!(seeded == 1, is_golomb(&r), "{z:?} has multiplicity {seeded}");
            });
        }
    }
}

#[test]
fn every_region_contains_a_golomb_ruler() {
    let mut budget = Budget::unlimited();
    for m in 1..=4 {
        let os = enumerate_constrained_orientations(m, &mut budget).unwrap();
        let mut signs = BTreeSet::new();
        for o in &os {
            let s = region_sign_vector(o).unwrap();
            let z: Vec<u64> = s.witness.iter().map(|&x| x as u64).collect();
            assert!(s.witness.iter().all(|&x| x > 0));
            assert!(is_golomb(&Ruler::new(z.clone()).unwrap()), "{o}: {z:?}");
            assert_eq!(orientation_of_point(&z).as_ref(), Some(o));
            assert_eq!(s.signs.len(), golomb_hyperplanes(m).len());
            assert!(s.signs.iter().all(|(h, sign)| h.eval_int(&z).signum() == *sign as i128));
            assert!(signs.insert(s.signs.iter().map(|(_, x)| *x).collect::<Vec<_>>()));
        }
        assert_eq!(signs.len(), os.len());
    }
}

#[test]
fn rulers_hit_exactly_the_enumerated_regions() {
    // Every Golomb ruler lies in a region; scanning lengths until every
    // region has been seen must never produce an order outside the list.
    let mut budget = Budget::unlimited();
    for m in 1..=4 {
        let all: BTreeSet<GolombOrientation> =
            enumerate_constrained_orientations(m, &mut budget).unwrap().into_iter().collect();
        let mut hit = BTreeSet::new();
        let mut t = 1;
        while hit.len() < all.len() {
            golomb_core::golomb::for_each_golomb_ruler(m, t, None, &mut budget, |z| {
                let o = orientation_of_point(z).expect("Golomb rulers are generic");
                assert!(all.contains(&o), "{o} from {z:?}");
                hit.insert(o);
                std::ops::ControlFlow::Continue(())
            })
            .unwrap();
            t += 1;
            assert!(t < 200, "m={m}: only {} of {} regions reached", hit.len(), all.len());
        }
    }
}

#[test]
fn complement_is_an_involution_on_regions() {
    let mut budget = Budget::unlimited();
    for m in 2..=5 {
        let os = enumerate_constrained_orientations(m, &mut budget).unwrap();
        let set: BTreeSet<&GolombOrientation> = os.iter().collect();
        for o in &os {
            let c = o.complement();
            assert!(set.contains(&c));
            assert_eq!(&c.complement(), o);
        }
    }
}

#[test]
fn shift_rule_admits_unrealizable_orders_from_four() {
    let mut budget = Budget::unlimited();
    for m in 1..=3 {
        assert_eq!(
            enumerate_orientations(m, OrientationRule::ShiftConsistent, &mut budget).unwrap(),
            enumerate_constrained_orientations(m, &mut budget).unwrap()
        );
    }
    let loose = enumerate_orientations(4, OrientationRule::ShiftConsistent, &mut budget).unwrap();
    let strict: BTreeSet<_> = enumerate_constrained_orientations(4, &mut budget).unwrap().into_iter().collect();
    let extra: Vec<_> = loose.iter().filter(|o| !strict.contains(o)).collect();
    assert_eq!(extra.len(), 8);
    for o in extra {
        assert_eq!(region_sign_vector(o).unwrap_err(), Error::Unrealizable);
    }
}

#[test]
fn orientations_are_acyclic_orientations_of_the_golomb_graph() {
    let mut budget = Budget::unlimited();
    for m in 1..=4 {
        let g = build_golomb_graph(m);
        assert!(is_acyclic_mixed(&g));
        let subsets = consecutive_subsets(m);
        for o in enumerate_constrained_orientations(m, &mut budget).unwrap() {
            for &(u, v) in g.arcs() {
                assert!(o.precedes(&subsets[u], &subsets[v]));
            }
        }
    }
}

#[test]
fn counts_up_to_five() {
    let mut budget = Budget::unlimited();
    let counts: Vec<u64> = (1..=5).map(|m| count_constrained_orientations(m, &mut budget).unwrap()).collect();
    assert_eq!(counts, [1, 2, 10, 114, 2608]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn seeded_and_filtered_multiplicity_agree(z in prop::collection::vec(0u64..7, 1..5)) {
        let m = z.len();
        let index = RegionIndex::new(m, &mut Budget::unlimited()).unwrap();
        let got = if z.iter().all(|&x| x == 0) {
            index.len() as u64
        } else {
            multiplicity(&Ruler::new(z.clone()).unwrap(), &mut Budget::unlimited()).unwrap()
        };
        prop_assert_eq!(got, index.multiplicity(&z));
        prop_assert!(got >= 1);
    }
}
