//! The Golomb hyperplane arrangement inside the standard simplex.
//!
//! For `m` gaps the arrangement consists of the linear hyperplanes
//! `sum_{j in U} z_j = sum_{j in V} z_j`, one per pair of disjoint intervals
//! `U`, `V` of `{1..m}`. Together with the simplex `z >= 0, sum z = 1` they
//! cut out a subdivision whose vertices bound the period of the ruler
//! counting quasipolynomial.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::golomb::dpcs_pairs;
use crate::linalg::solve_unique;
use crate::rational::{self, Rational};

/// A linear hyperplane `normal . z = 0` in canonical form: the entries have
/// gcd 1 and the first nonzero entry is positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperplane {
    normal: Vec<i64>,
}

impl Hyperplane {
    /// Normalizes `normal`; `None` for the zero vector.
    pub fn canonical(mut normal: Vec<i64>) -> Option<Self> {
        let first = *normal.iter().find(|&&c| c != 0)?;
        let g = normal.iter().fold(0i64, |g, &c| g.gcd(&c));
        let s = if first < 0 { -g } else { g };
        for c in &mut normal {
            *c /= s;
        }
        Some(Hyperplane { normal })
    }

    pub fn normal(&self) -> &[i64] {
        &self.normal
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn eval(&self, z: &[Rational]) -> Rational {
        self.normal.iter().zip(z).map(|(&c, x)| x * BigInt::from(c)).fold(Rational::zero(), |a, b| a + b)
    }

    pub fn eval_int(&self, z: &[u64]) -> i128 {
        self.normal.iter().zip(z).map(|(&c, &x)| c as i128 * x as i128).sum()
    }

    /// Image under the gap reversal `z_i -> z_{m+1-i}`, canonicalized.
    pub fn reversed(&self) -> Hyperplane {
        let mut n = self.normal.clone();
        n.reverse();
        Hyperplane::canonical(n).expect("nonzero")
    }
}

fn interval_difference(m: usize, u: (usize, usize), v: (usize, usize)) -> Vec<i64> {
    let mut n = vec![0i64; m];
    for j in u.0..=u.1 {
        n[j - 1] += 1;
    }
    for j in v.0..=v.1 {
        n[j - 1] -= 1;
    }
    n
}

/// The hyperplanes of the arrangement, deduplicated and sorted.
pub fn golomb_hyperplanes(m: usize) -> Vec<Hyperplane> {
    let set: BTreeSet<Hyperplane> =
        dpcs_pairs(m).into_iter().filter_map(|p| Hyperplane::canonical(interval_difference(m, p.u, p.v))).collect();
    set.into_iter().collect()
}

/// A point with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalPoint {
    pub coords: Vec<Rational>,
}

impl RationalPoint {
    pub fn new(coords: Vec<Rational>) -> Self {
        RationalPoint { coords }
    }

    pub fn from_fracs(c: &[(i64, i64)]) -> Self {
        RationalPoint { coords: c.iter().map(|&(n, d)| rational::frac(n, d)).collect() }
    }

    pub fn in_simplex(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative()) && self.coords.iter().fold(Rational::zero(), |a, b| a + b).is_one()
    }

    pub fn reversed(&self) -> RationalPoint {
        let mut coords = self.coords.clone();
        coords.reverse();
        RationalPoint { coords }
    }
}

/// The homogeneous constraints whose intersections give vertices: every
/// arrangement hyperplane followed by the facets `z_j = 0`.
pub fn vertex_constraints(m: usize) -> Vec<Vec<i64>> {
    let mut rows: Vec<Vec<i64>> = golomb_hyperplanes(m).into_iter().map(|h| h.normal).collect();
    for j in 0..m {
        let mut e = vec![0i64; m];
        e[j] = 1;
        rows.push(e);
    }
    rows
}

/// Number of constraints from [`vertex_constraints`] the point lies on.
pub fn tight_constraint_count(m: usize, p: &RationalPoint) -> usize {
    vertex_constraints(m)
        .iter()
        .filter(|row| {
            row.iter().zip(&p.coords).map(|(&c, x)| x * BigInt::from(c)).fold(Rational::zero(), |a, b| a + b).is_zero()
        })
        .count()
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Vertices produced by the `(m-1)`-subsets of constraints whose smallest
/// member is `first`. The union over all `first` is [`iop_vertices`]; the
/// split lets callers distribute the work.
pub fn vertices_with_first_constraint(m: usize, first: usize, budget: &mut Budget) -> Result<BTreeSet<RationalPoint>> {
    let rows = vertex_constraints(m);
    let mut out = BTreeSet::new();
    if m < 2 || first >= rows.len() {
        return Ok(out);
    }
    let k = m - 1;
    let n = rows.len();
    if first + k > n {
        return Ok(out);
    }
    let ones: Vec<Rational> = vec![Rational::one(); m];
    let to_rat = |row: &Vec<i64>| row.iter().map(|&c| rational::int(c)).collect::<Vec<_>>();
    // The rest of the subset is a (k-1)-combination of first+1..n.
    let base = first + 1;
    let rest = k - 1;
    let mut local: Vec<usize> = (0..rest).collect();
    loop {
        budget.tick()?;
        let mut a = Vec::with_capacity(m);
        a.push(ones.clone());
        a.push(to_rat(&rows[first]));
        for &i in &local {
            a.push(to_rat(&rows[base + i]));
        }
        let mut b = vec![Rational::zero(); m];
        b[0] = Rational::one();
        if let Some(x) = solve_unique(a, b) {
            let p = RationalPoint { coords: x };
            if p.in_simplex() {
                out.insert(p);
            }
        }
        if rest == 0 || !next_combination(&mut local, n - base) {
            break;
        }
    }
    Ok(out)
}

/// All vertices of the subdivision of the simplex by the arrangement,
/// sorted. Empty for `m < 2`.
pub fn iop_vertices(m: usize, budget: &mut Budget) -> Result<Vec<RationalPoint>> {
    let mut all = BTreeSet::new();
    if m < 2 {
        return Ok(Vec::new());
    }
    for first in 0..vertex_constraints(m).len() {
        all.append(&mut vertices_with_first_constraint(m, first, budget)?);
    }
    Ok(all.into_iter().collect())
}

/// Lcm of the coordinate denominators of a vertex set.
pub fn denominator_lcm(vertices: &[RationalPoint]) -> Result<u64> {
    let l = rational::denominator_lcm(vertices.iter().flat_map(|v| v.coords.iter()));
    l.to_u64().ok_or_else(|| Error::InvalidArgument(alloc::format!("period bound {l} does not fit in 64 bits")))
}

/// A multiple of the period of the ruler counting quasipolynomial: the lcm
/// of the vertex coordinate denominators (1 when `m < 2`).
pub fn period_bound(m: usize, budget: &mut Budget) -> Result<u64> {
    denominator_lcm(&iop_vertices(m, budget)?)
}
