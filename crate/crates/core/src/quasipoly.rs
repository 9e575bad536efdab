//! Quasipolynomials with exact rational coefficients.
//!
//! A quasipolynomial of period `p` is a list of `p` constituent
//! polynomials; at `t` it evaluates the constituent of residue
//! `t mod p`, using the nonnegative residue for negative `t`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::One;

use crate::arrangement::period_bound;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::golomb::{count_golomb_rulers, Ruler};
use crate::golombgraph::RegionIndex;
use crate::poly::Polynomial;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quasipolynomial {
    constituents: Vec<Polynomial>,
}

impl Quasipolynomial {
    pub fn new(constituents: Vec<Polynomial>) -> Result<Self> {
        if constituents.is_empty() {
            return Err(Error::InvalidArgument("a quasipolynomial needs at least one constituent".into()));
        }
        Ok(Quasipolynomial { constituents })
    }

    pub fn period(&self) -> u64 {
        self.constituents.len() as u64
    }

    pub fn constituents(&self) -> &[Polynomial] {
        &self.constituents
    }

    pub fn residue(&self, t: i64) -> usize {
        t.rem_euclid(self.constituents.len() as i64) as usize
    }

    pub fn constituent(&self, residue: usize) -> &Polynomial {
        &self.constituents[residue]
    }

    /// Largest constituent degree; `None` when every constituent is zero.
    pub fn degree(&self) -> Option<usize> {
        self.constituents.iter().filter_map(Polynomial::degree).max()
    }

    pub fn evaluate(&self, t: i64) -> Rational {
        self.constituents[self.residue(t)].eval_int(t)
    }

    /// Smallest period: the least divisor `d` of the stored period with
    /// constituent `i` equal to constituent `i mod d` throughout.
    pub fn minimal_period(&self) -> u64 {
        let p = self.constituents.len();
        (1..=p)
            .find(|&d| p.is_multiple_of(d) && (0..p).all(|i| self.constituents[i] == self.constituents[i % d]))
            .unwrap_or(p) as u64
    }

    /// Period of the coefficient of `t^j` as a function of the residue.
    pub fn coefficient_period(&self, j: usize) -> u64 {
        let c: Vec<Rational> = self.constituents.iter().map(|q| q.coeff(j)).collect();
        let p = c.len();
        (1..=p).find(|&d| p.is_multiple_of(d) && (0..p).all(|i| c[i] == c[i % d])).unwrap_or(p) as u64
    }

    /// Same function, constituents repeated to period `p` (a multiple of
    /// the current one).
    pub fn with_period(&self, p: u64) -> Result<Self> {
        let cur = self.period();
        if p == 0 || !p.is_multiple_of(cur) {
            return Err(Error::InvalidArgument(alloc::format!("{p} is not a multiple of the period {cur}")));
        }
        Ok(Quasipolynomial { constituents: (0..p).map(|i| self.constituents[(i % cur) as usize].clone()).collect() })
    }
}

/// Interpolates a quasipolynomial of degree at most `degree` and period
/// `period` from values at `t >= 1`.
///
/// Each residue class uses its `degree + 1` smallest nodes; any further
/// nodes must lie on the same polynomial.
pub fn interpolate<I>(values: I, degree: usize, period: u64) -> Result<Quasipolynomial>
where
    I: IntoIterator<Item = (i64, BigInt)>,
{
    if period == 0 {
        return Err(Error::InvalidArgument("period must be positive".into()));
    }
    let mut classes: Vec<BTreeMap<i64, BigInt>> = (0..period).map(|_| BTreeMap::new()).collect();
    for (t, v) in values {
        if t < 1 {
            return Err(Error::InvalidArgument(alloc::format!("interpolation node t = {t} is below 1")));
        }
        classes[t.rem_euclid(period as i64) as usize].insert(t, v);
    }
    let mut constituents = Vec::with_capacity(period as usize);
    for (residue, class) in classes.iter().enumerate() {
        if class.len() < degree + 1 {
            return Err(Error::InsufficientPoints { residue: residue as u64, have: class.len(), need: degree + 1 });
        }
        let pts: Vec<(Rational, Rational)> = class
            .iter()
            .take(degree + 1)
            .map(|(&t, v)| (rational::int(t), Rational::from_integer(v.clone())))
            .collect();
        let poly = Polynomial::interpolate(&pts)?.padded(degree + 1).expect("degree bound");
        for (&t, v) in class.iter().skip(degree + 1) {
            if poly.eval_int(t) != Rational::from_integer(v.clone()) {
                return Err(Error::Inconsistent { residue: residue as u64, t, degree });
            }
        }
        constituents.push(poly);
    }
    Quasipolynomial::new(constituents)
}

/// Builds the ruler counting quasipolynomial from counts `g_m(t)` at
/// `t = 1..`, checking that every constituent leads with `1/(m-1)!`.
pub fn golomb_quasipolynomial_from_counts<I>(m: usize, period: u64, counts: I) -> Result<Quasipolynomial>
where
    I: IntoIterator<Item = (i64, u64)>,
{
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let q = interpolate(counts.into_iter().map(|(t, c)| (t, BigInt::from(c))), m - 1, period)?;
    let expected = Rational::new(BigInt::one(), rational::factorial(m as u32 - 1));
    for (i, c) in q.constituents().iter().enumerate() {
        let lead = c.coeff(m - 1);
        if lead != expected {
            return Err(Error::LeadingCoefficient {
                residue: i as u64,
                found: rational::to_canonical_string(&lead),
                expected: rational::to_canonical_string(&expected),
            });
        }
    }
    Ok(q)
}

/// Nodes `1..=period*m` used to interpolate `g_m`.
pub fn interpolation_range(m: usize, period: u64) -> RangeInclusive<u64> {
    1..=period * m as u64
}

/// The ruler counting quasipolynomial `g_m`, interpolated from brute-force
/// counts at `t = 1..=p*m`, where `p` is `period_hint` or the vertex
/// denominator bound.
pub fn golomb_quasipolynomial(m: usize, period_hint: Option<u64>, budget: &mut Budget) -> Result<Quasipolynomial> {
    let p = match period_hint {
        Some(p) => p,
        None => period_bound(m, budget)?,
    };
    let mut counts = Vec::new();
    for t in interpolation_range(m, p) {
        counts.push((t as i64, count_golomb_rulers(m, t, budget)?));
    }
    golomb_quasipolynomial_from_counts(m, p, counts)
}

/// One row of the ruler reciprocity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GolombReciprocityRow {
    pub t: u64,
    /// `(-1)^(m-1) g_m(-t)`.
    pub lhs: Rational,
    /// Sum of Golomb multiplicities over rulers in `Z_{>=0}^m` of length `t`.
    pub rhs: u64,
}

impl GolombReciprocityRow {
    pub fn holds(&self) -> bool {
        self.lhs == Rational::from_integer(self.rhs.into())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GolombReciprocityReport {
    pub m: usize,
    pub quasipolynomial: Quasipolynomial,
    pub rows: Vec<GolombReciprocityRow>,
    /// Number of regions (the right-hand side at `t = 0`).
    pub regions: u64,
}

impl GolombReciprocityReport {
    pub fn all_hold(&self) -> bool {
        self.rows.iter().all(GolombReciprocityRow::holds)
    }

    /// `(-1)^(m-1) g_m(0)`, which should equal [`Self::regions`].
    pub fn value_at_zero(&self) -> Rational {
        signed_value(&self.quasipolynomial, self.m, 0)
    }
}

fn signed_value(q: &Quasipolynomial, m: usize, t: u64) -> Rational {
    let v = q.evaluate(-(t as i64));
    if (m - 1) % 2 == 1 {
        -v
    } else {
        v
    }
}

/// Calls `f` on every vector of `m` nonnegative integers summing to `t`,
/// in lexicographic order.
pub fn for_each_weak_composition<F: FnMut(&[u64])>(m: usize, t: u64, mut f: F) {
    fn go<F: FnMut(&[u64])>(z: &mut Vec<u64>, m: usize, left: u64, f: &mut F) {
        if z.len() + 1 == m {
            z.push(left);
            f(z);
            z.pop();
            return;
        }
        for x in 0..=left {
            z.push(x);
            go(z, m, left - x, f);
            z.pop();
        }
    }
    if m == 0 {
        return;
    }
    go(&mut Vec::with_capacity(m), m, t, &mut f);
}

/// Compares `(-1)^(m-1) g_m(-t)` with the multiplicity-weighted ruler count
/// for each `t` in `ts`, using an already computed quasipolynomial and
/// region list.
pub fn reciprocity_rows(
    q: &Quasipolynomial,
    regions: &RegionIndex,
    ts: impl IntoIterator<Item = u64>,
    budget: &mut Budget,
) -> Result<Vec<GolombReciprocityRow>> {
    let m = regions.m();
    let mut rows = Vec::new();
    for t in ts {
        let mut rhs = 0u64;
        let mut ticks = 0u64;
        for_each_weak_composition(m, t, |z| {
            ticks += 1;
            rhs += regions.multiplicity(z);
        });
        budget.charge(ticks)?;
        rows.push(GolombReciprocityRow { t, lhs: signed_value(q, m, t), rhs });
    }
    Ok(rows)
}

pub fn reciprocity_check_golomb(
    m: usize,
    ts: impl IntoIterator<Item = u64>,
    budget: &mut Budget,
) -> Result<GolombReciprocityReport> {
    let q = golomb_quasipolynomial(m, None, budget)?;
    let regions = RegionIndex::new(m, budget)?;
    let rows = reciprocity_rows(&q, &regions, ts, budget)?;
    Ok(GolombReciprocityReport { m, quasipolynomial: q, rows, regions: regions.len() as u64 })
}

/// Multiplicity of a single ruler, for callers holding a [`RegionIndex`].
pub fn indexed_multiplicity(regions: &RegionIndex, r: &Ruler) -> u64 {
    regions.multiplicity(r.gaps())
}
