//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. Run with `cargo test -p golomb-tools --test acceptance`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use golomb_core::arrangement::{iop_vertices, period_bound, RationalPoint};
use golomb_core::golomb::{count_golomb_rulers, is_golomb, optimal_length, Ruler};
use golomb_core::golombgraph::{count_constrained_orientations, multiplicity, RegionIndex};
use golomb_core::mixedgraph::{
    chromatic_polynomial, compatible_orientation_count, enumerate_acyclic_orientations, reciprocity_check_mixed,
    MixedGraph,
};
use golomb_core::poly::Polynomial;
use golomb_core::quasipoly::{
    for_each_weak_composition, golomb_quasipolynomial, interpolation_range, reciprocity_check_golomb,
};
use golomb_core::rational::{frac, int};
use golomb_core::{Budget, Rational};
use golomb_tools::fixtures::{triangle, TriangleRow, TABLE1, TRIANGLE_T2, TRIANGLE_T3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn unlimited() -> Budget {
    Budget::unlimited()
}

fn secs(d: Duration) -> String {
    format!("{:.2} s", d.as_secs_f64())
}

fn table1() -> Check {
    let start = Instant::now();
    let mut b = unlimited();
    for &(t, want) in &TABLE1 {
        let got = count_golomb_rulers(3, t, &mut b).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("g_3({t}) = {got}, expected {want}"))?;
    }
    let el = start.elapsed();
    ensure(el < Duration::from_secs(5), || format!("took {}", secs(el)))?;
    Ok(format!("30/30 values, {} (limit 5 s)", secs(el)))
}

fn closed_form() -> Check {
    let q = golomb_quasipolynomial(3, None, &mut unlimited()).map_err(|e| e.to_string())?;
    ensure(q.period() == 12, || format!("period {}", q.period()))?;
    for r in 0..12usize {
        let (c0, c1) = match r {
            0 => (int(10), -4),
            1 | 5 | 7 | 11 => (frac(5, 2), -3),
            2 | 10 => (int(6), -4),
            3 | 9 => (frac(9, 2), -3),
            _ => (int(8), -4),
        };
        let want = Polynomial::from_coeffs(vec![c0, int(c1), frac(1, 2)]);
        ensure(q.constituent(r) == &want, || format!("residue {r}: {} vs {want}", q.constituent(r)))?;
    }
    let classes: BTreeSet<Vec<Rational>> = q.constituents().iter().map(|c| c.coeffs().to_vec()).collect();
    ensure(classes.len() == 5, || format!("{} distinct constituents", classes.len()))?;
    Ok("period 12, 5 constituent classes, leading coefficient 1/2, exact".into())
}

fn vertices() -> Check {
    let got: BTreeSet<RationalPoint> =
        iop_vertices(3, &mut unlimited()).map_err(|e| e.to_string())?.into_iter().collect();
    let want: BTreeSet<RationalPoint> = [
        [(1, 1), (0, 1), (0, 1)],
        [(0, 1), (1, 1), (0, 1)],
        [(0, 1), (0, 1), (1, 1)],
        [(1, 2), (1, 2), (0, 1)],
        [(1, 2), (0, 1), (1, 2)],
        [(0, 1), (1, 2), (1, 2)],
        [(1, 3), (1, 3), (1, 3)],
        [(1, 2), (1, 4), (1, 4)],
        [(1, 4), (1, 4), (1, 2)],
    ]
    .iter()
    .map(|p| RationalPoint::from_fracs(p))
    .collect();
    ensure(got == want, || format!("vertex set differs: {got:?}"))?;
    let p = period_bound(3, &mut unlimited()).map_err(|e| e.to_string())?;
    ensure(p == 12, || format!("period bound {p}"))?;
    Ok("9 vertices as exact rationals, period bound 12".into())
}

fn regions() -> Check {
    let start = Instant::now();
    let mut counts = Vec::new();
    for m in 1..=5 {
        counts.push(count_constrained_orientations(m, &mut unlimited()).map_err(|e| e.to_string())?);
    }
    let small = start.elapsed();
    ensure(counts == [1, 2, 10, 114, 2608], || format!("m=1..5 gave {counts:?}"))?;
    ensure(small < Duration::from_secs(60), || format!("m<=5 took {}", secs(small)))?;
    let start = Instant::now();
    let c6 = count_constrained_orientations(6, &mut unlimited()).map_err(|e| e.to_string())?;
    let big = start.elapsed();
    ensure(c6 == 107498, || format!("m=6 gave {c6}"))?;
    ensure(big < Duration::from_secs(1800), || format!("m=6 took {}", secs(big)))?;
    Ok(format!("1, 2, 10, 114, 2608 in {} (limit 60 s); 107498 for m=6 in {} (limit 30 min)", secs(small), secs(big)))
}

fn golomb_reciprocity() -> Check {
    let mut at_zero = Vec::new();
    for m in [2, 3] {
        let r = reciprocity_check_golomb(m, 0..=8, &mut unlimited()).map_err(|e| e.to_string())?;
        for row in &r.rows {
            ensure(row.holds(), || format!("m={m} t={}: {} vs {}", row.t, row.lhs, row.rhs))?;
        }
        at_zero.push(r.rows[0].rhs);
    }
    ensure(at_zero == [2, 10], || format!("t=0 values {at_zero:?}"))?;
    Ok("m=2,3, t=0..8 all equal; t=0 gives 2 and 10".into())
}

fn triangle_rows(g: &MixedGraph, t: i64, rows: &[TriangleRow]) -> Result<(), String> {
    let mut expected_points = BTreeSet::new();
    for a in 0..t {
        for b in a..t {
            for c in 0..t {
                expected_points.insert([a, b, c]);
            }
        }
    }
    let listed: BTreeSet<[i64; 3]> = rows.iter().map(|r| r.point).collect();
    ensure(listed == expected_points, || format!("t={t}: table lists {} points", listed.len()))?;
    let os = enumerate_acyclic_orientations(g, &mut unlimited()).map_err(|e| e.to_string())?;
    for row in rows {
        let k = compatible_orientation_count(g, &row.point, &mut unlimited()).map_err(|e| e.to_string())?;
        ensure(k == row.multiplicity, || format!("{:?}: multiplicity {k}, expected {}", row.point, row.multiplicity))?;
        let regions: BTreeSet<Vec<usize>> = os
            .iter()
            .filter(|o| o.is_compatible(g, &row.point))
            .map(|o| o.linear_order(g).unwrap().into_iter().map(|v| v + 1).collect())
            .collect();
        let want: BTreeSet<Vec<usize>> = row.regions.iter().map(|r| r.to_vec()).collect();
        ensure(regions == want, || format!("{:?}: regions {regions:?}", row.point))?;
    }
    Ok(())
}

fn mixed_example() -> Check {
    let g = triangle();
    let chi = chromatic_polynomial(&g, &mut unlimited()).map_err(|e| e.to_string())?;
    let want = Polynomial::from_coeffs(vec![int(0), int(1), frac(-3, 2), frac(1, 2)]);
    ensure(chi == want, || format!("chi = {chi}"))?;
    for (t, v) in [(1, 3), (2, 12), (3, 30)] {
        let got = -chi.eval_int(-t);
        ensure(got == int(v), || format!("-chi(-{t}) = {got}"))?;
        let r = reciprocity_check_mixed(&g, t as u64, &mut unlimited()).map_err(|e| e.to_string())?;
        ensure(r.holds() && r.rhs == v as u64, || format!("t={t}: {r:?}"))?;
    }
    triangle_rows(&g, 2, &TRIANGLE_T2)?;
    triangle_rows(&g, 3, &TRIANGLE_T3)?;
    Ok("chi = t(t-1)(t-2)/2; 3, 12, 30; 6 + 18 table rows match".into())
}

fn random_graph(rng: &mut impl Rng, n: usize, arcs: bool) -> MixedGraph {
    let (mut e, mut a) = (Vec::new(), Vec::new());
    for u in 0..n {
        for v in u + 1..n {
            match rng.gen_range(0..if arcs { 4 } else { 2 }) {
                0 => {}
                1 => e.push((u, v)),
                2 => a.push((u, v)),
                _ => a.push((v, u)),
            }
        }
    }
    MixedGraph::new(n, e, a).unwrap()
}

/// Classical chromatic polynomial of an undirected graph by
/// deletion-contraction.
fn deletion_contraction(n: usize, edges: &BTreeSet<(usize, usize)>) -> Polynomial {
    let Some(&(u, v)) = edges.iter().next() else {
        let mut c = vec![int(0); n + 1];
        c[n] = int(1);
        return Polynomial::from_coeffs(c);
    };
    let mut deleted = edges.clone();
    deleted.remove(&(u, v));
    let relabel = |x: usize| {
        if x == v {
            u
        } else if x > v {
            x - 1
        } else {
            x
        }
    };
    let contracted = deleted
        .iter()
        .map(|&(a, b)| (relabel(a), relabel(b)))
        .filter(|(a, b)| a != b)
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    let p = deletion_contraction(n, &deleted);
    let q = deletion_contraction(n - 1, &contracted);
    let len = p.coeffs().len().max(q.coeffs().len());
    Polynomial::from_coeffs((0..len).map(|i| p.coeff(i) - q.coeff(i)).collect())
}

fn properties() -> Check {
    let mut notes = Vec::new();

    let mut vectors = 0;
    for m in 1..=4 {
        let index = RegionIndex::new(m, &mut unlimited()).map_err(|e| e.to_string())?;
        let mut failure = None;
        for t in 1..=20 {
            for_each_weak_composition(m, t, |z| {
                if failure.is_some() || z.contains(&0) {
                    return;
                }
                vectors += 1;
                let r = Ruler::new(z.to_vec()).unwrap();
                let k = multiplicity(&r, &mut unlimited()).unwrap();
                if k != index.multiplicity(z) || (k == 1) != is_golomb(&r) {
                    failure = Some(format!("{z:?}: multiplicity {k}, golomb {}", is_golomb(&r)));
                }
            });
        }
        if let Some(f) = failure {
            return Err(f);
        }
    }
    notes.push(format!("multiplicity 1 <=> Golomb on {vectors} gap vectors"));

    let mut held_out = 0;
    for m in 1..=3 {
        let q = golomb_quasipolynomial(m, None, &mut unlimited()).map_err(|e| e.to_string())?;
        let from = interpolation_range(m, q.period()).end() + 1;
        for t in from..from + 30 {
            let brute = count_golomb_rulers(m, t, &mut unlimited()).map_err(|e| e.to_string())?;
            ensure(q.evaluate(t as i64) == int(brute as i64), || format!("g_{m}({t})"))?;
            held_out += 1;
        }
    }
    notes.push(format!("{held_out} held-out values"));

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut graphs = 0;
    while graphs < 100 {
        let n = rng.gen_range(1..=6);
        let g = random_graph(&mut rng, n, false);
        if g.edges().len() > 8 {
            continue;
        }
        let chi = chromatic_polynomial(&g, &mut unlimited()).map_err(|e| e.to_string())?;
        let edges: BTreeSet<_> = g.edges().iter().copied().collect();
        ensure(chi == deletion_contraction(n, &edges), || format!("{g:?}"))?;
        graphs += 1;
    }
    notes.push("100 undirected graphs vs deletion-contraction".into());

    for _ in 0..100 {
        let n = rng.gen_range(1..=4);
        let g = random_graph(&mut rng, n, true);
        for t in 0..=3 {
            let r = reciprocity_check_mixed(&g, t, &mut unlimited()).map_err(|e| e.to_string())?;
            ensure(r.holds(), || format!("{g:?} t={t}: {r:?}"))?;
        }
    }
    notes.push("reciprocity on 100 random mixed graphs".into());
    Ok(notes.join("; "))
}

fn optimal() -> Check {
    let start = Instant::now();
    let mut got = Vec::new();
    for m in 1..=4 {
        got.push(optimal_length(m, 100, &mut unlimited()).map_err(|e| e.to_string())?);
    }
    let el = start.elapsed();
    ensure(got == [1, 3, 6, 11], || format!("{got:?}"))?;
    ensure(el < Duration::from_secs(10), || format!("took {}", secs(el)))?;
    Ok(format!("1, 3, 6, 11 in {} (limit 10 s)", secs(el)))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("g_3 reference values", table1),
        ("closed form of g_3", closed_form),
        ("vertices and period bound for m=3", vertices),
        ("region sequence", regions),
        ("ruler reciprocity", golomb_reciprocity),
        ("mixed graph example", mixed_example),
        ("property suite", properties),
        ("optimal lengths", optimal),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS  criterion {}: {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
