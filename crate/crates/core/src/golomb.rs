//! Golomb rulers in gap ("measurement") form.
//!
//! A ruler with `m + 1` markings `0 = x_0 < x_1 < ... < x_m = t` is stored as
//! its gap vector `z_k = x_k - x_{k-1}`. It is Golomb when every gap is
//! positive and no two disjoint runs of consecutive gaps have the same sum,
//! which is the same as all differences `x_j - x_k` being distinct.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::budget::Budget;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ruler {
    gaps: Vec<u64>,
}

impl Ruler {
    /// Builds a ruler from its gaps; at least one gap is required.
    pub fn new(gaps: Vec<u64>) -> Result<Self> {
        if gaps.is_empty() {
            return Err(Error::InvalidArgument("a ruler needs at least one gap".into()));
        }
        Ok(Ruler { gaps })
    }

    /// Builds a ruler from strictly increasing markings starting at 0.
    pub fn from_markings(marks: &[u64]) -> Result<Self> {
        if marks.len() < 2 || marks[0] != 0 {
            return Err(Error::InvalidArgument("markings must start at 0 and have at least two entries".into()));
        }
        let mut gaps = Vec::with_capacity(marks.len() - 1);
        for w in marks.windows(2) {
            if w[1] <= w[0] {
                return Err(Error::InvalidArgument("markings must be strictly increasing".into()));
            }
            gaps.push(w[1] - w[0]);
        }
        Ok(Ruler { gaps })
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// Number of gaps (one less than the number of markings).
    pub fn m(&self) -> usize {
        self.gaps.len()
    }

    pub fn length(&self) -> u128 {
        self.gaps.iter().map(|&g| g as u128).sum()
    }

    pub fn markings(&self) -> Vec<u128> {
        let mut acc = 0u128;
        let mut out = Vec::with_capacity(self.gaps.len() + 1);
        out.push(0);
        for &g in &self.gaps {
            acc += g as u128;
            out.push(acc);
        }
        out
    }

    /// Sum of the gaps `z_a..=z_b` (1-based, inclusive).
    pub fn interval_sum(&self, a: usize, b: usize) -> u128 {
        self.gaps[a - 1..b].iter().map(|&g| g as u128).sum()
    }
}

/// Two disjoint proper consecutive subsets `U = [a, b]`, `V = [c, d]` of
/// `{1..m}` with `1 <= a <= b < c <= d <= m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DpcsPair {
    pub u: (usize, usize),
    pub v: (usize, usize),
}

impl DpcsPair {
    pub fn new(u: (usize, usize), v: (usize, usize)) -> Result<Self> {
        let (a, b) = u;
        let (c, d) = v;
        if !(1 <= a && a <= b && b < c && c <= d) {
            return Err(Error::InvalidArgument(alloc::format!(
                "[{a},{b}] and [{c},{d}] are not disjoint ordered intervals"
            )));
        }
        Ok(DpcsPair { u, v })
    }
}

/// All dpcs pairs for `m` gaps, in lexicographic order of `(a, b, c, d)`.
pub fn dpcs_pairs(m: usize) -> Vec<DpcsPair> {
    let mut out = Vec::new();
    for a in 1..=m {
        for b in a..=m {
            for c in b + 1..=m {
                for d in c..=m {
                    out.push(DpcsPair { u: (a, b), v: (c, d) });
                }
            }
        }
    }
    out
}

pub fn is_golomb(r: &Ruler) -> bool {
    if r.gaps.contains(&0) {
        return false;
    }
    let m = r.m();
    let prefix: Vec<u128> = r.markings();
    let sum = |a: usize, b: usize| prefix[b] - prefix[a - 1];
    dpcs_pairs(m).iter().all(|p| sum(p.u.0, p.u.1) != sum(p.v.0, p.v.1))
}

/// Whether all differences `x_j - x_k` (`j > k`) of the markings are
/// distinct. For rulers with positive gaps this agrees with [`is_golomb`].
pub fn has_distinct_differences(r: &Ruler) -> bool {
    let x = r.markings();
    let mut diffs = Vec::with_capacity(x.len() * (x.len() - 1) / 2);
    for j in 0..x.len() {
        for k in 0..j {
            diffs.push(x[j] - x[k]);
        }
    }
    diffs.sort_unstable();
    diffs.windows(2).all(|w| w[0] != w[1]) && !diffs.contains(&0)
}

/// Reverses the gaps. Golomb rulers map to Golomb rulers.
pub fn complement(r: &Ruler) -> Ruler {
    let mut gaps = r.gaps.clone();
    gaps.reverse();
    Ruler { gaps }
}

struct Search<'a> {
    m: usize,
    t: u64,
    marks: Vec<u64>,
    used: Vec<u64>,
    budget: &'a mut Budget,
}

impl Search<'_> {
    #[inline]
    fn test(&self, d: u64) -> bool {
        self.used[(d / 64) as usize] >> (d % 64) & 1 == 1
    }

    #[inline]
    fn flip(&mut self, d: u64) {
        self.used[(d / 64) as usize] ^= 1 << (d % 64);
    }

    /// Marks the differences created by placing `x` as the next mark.
    /// Returns how many were set before a clash, or `None` on success.
    fn place(&mut self, x: u64) -> Option<usize> {
        let k = self.marks.len();
        for j in 0..k {
            let d = x - self.marks[j];
            if self.test(d) {
                return Some(j);
            }
            self.flip(d);
        }
        let d = self.t - x;
        if self.test(d) {
            return Some(k);
        }
        self.flip(d);
        None
    }

    fn unplace(&mut self, x: u64, set: usize) {
        let k = self.marks.len();
        for j in 0..set.min(k) {
            let d = x - self.marks[j];
            self.flip(d);
        }
        if set > k {
            let d = self.t - x;
            self.flip(d);
        }
    }

    fn run<F>(&mut self, first: Option<u64>, f: &mut F) -> Result<ControlFlow<()>>
    where
        F: FnMut(&[u64]) -> ControlFlow<()>,
    {
        let k = self.marks.len();
        if k == self.m {
            let mut gaps = Vec::with_capacity(self.m);
            for w in self.marks.windows(2) {
                gaps.push(w[1] - w[0]);
            }
            gaps.push(self.t - self.marks[k - 1]);
            return Ok(f(&gaps));
        }
        let prev = self.marks[k - 1];
        let hi = self.t - (self.m - k) as u64;
        let (lo, hi) = match first {
            Some(z1) if k == 1 => (z1.max(prev + 1), z1.min(hi)),
            _ => (prev + 1, hi),
        };
        for x in lo..=hi {
            self.budget.tick()?;
            match self.place(x) {
                Some(set) => self.unplace(x, set),
                None => {
                    self.marks.push(x);
                    let flow = self.run(None, f);
                    self.marks.pop();
                    self.unplace(x, k + 1);
                    if flow? == ControlFlow::Break(()) {
                        return Ok(ControlFlow::Break(()));
                    }
                }
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

/// Visits every Golomb ruler with `m` gaps and length `t` in lexicographic
/// order of gaps. With `first_gap = Some(z)` only rulers with `z_1 = z` are
/// visited, which lets callers split the search.
pub fn for_each_golomb_ruler<F>(m: usize, t: u64, first_gap: Option<u64>, budget: &mut Budget, mut f: F) -> Result<()>
where
    F: FnMut(&[u64]) -> ControlFlow<()>,
{
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    if t < m as u64 {
        return Ok(());
    }
    if m == 1 {
        budget.tick()?;
        if first_gap.is_none_or(|z| z == t) {
            let _ = f(&[t]);
        }
        return Ok(());
    }
    let words = (t / 64 + 1) as usize;
    let mut used = vec![0u64; words];
    used[(t / 64) as usize] |= 1 << (t % 64);
    let mut search = Search { m, t, marks: vec![0], used, budget };
    let _ = search.run(first_gap, &mut f)?;
    Ok(())
}

pub fn enumerate_golomb_rulers(m: usize, t: u64, budget: &mut Budget) -> Result<Vec<Ruler>> {
    let mut out = Vec::new();
    for_each_golomb_ruler(m, t, None, budget, |g| {
        out.push(Ruler { gaps: g.to_vec() });
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// `g_m(t)` as a literal lattice-point count: zero at `t = 0`.
pub fn count_golomb_rulers(m: usize, t: u64, budget: &mut Budget) -> Result<u64> {
    count_with_first_gap(m, t, None, budget)
}

pub fn count_with_first_gap(m: usize, t: u64, first_gap: Option<u64>, budget: &mut Budget) -> Result<u64> {
    let mut n = 0u64;
    for_each_golomb_ruler(m, t, first_gap, budget, |_| {
        n += 1;
        ControlFlow::Continue(())
    })?;
    Ok(n)
}

/// The lexicographically first Golomb ruler of length `t`, if any.
pub fn first_golomb_ruler(m: usize, t: u64, budget: &mut Budget) -> Result<Option<Ruler>> {
    let mut found = None;
    for_each_golomb_ruler(m, t, None, budget, |g| {
        found = Some(Ruler { gaps: g.to_vec() });
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// Least `t >= 1` admitting a Golomb ruler with `m` gaps, searching up to
/// `ceiling`.
pub fn optimal_length(m: usize, ceiling: u64, budget: &mut Budget) -> Result<u64> {
    for t in 1..=ceiling {
        if first_golomb_ruler(m, t, budget)?.is_some() {
            return Ok(t);
        }
    }
    Err(Error::CeilingExceeded { ceiling })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(g: &[u64]) -> Ruler {
        Ruler::new(g.to_vec()).unwrap()
    }

    fn count(m: usize, t: u64) -> u64 {
        count_golomb_rulers(m, t, &mut Budget::unlimited()).unwrap()
    }

    #[test]
    fn recognizes_small_rulers() {
        assert!(is_golomb(&r(&[1, 3, 2])));
        assert!(!is_golomb(&r(&[1, 2, 3])));
        assert!(is_golomb(&r(&[2, 3, 4])));
        assert!(!is_golomb(&r(&[0, 3])));
        assert!(is_golomb(&r(&[5])));
    }

    #[test]
    fn markings_round_trip() {
        let ruler = Ruler::from_markings(&[0, 1, 4, 6]).unwrap();
        assert_eq!(ruler.gaps(), &[1, 3, 2]);
        assert_eq!(ruler.markings(), vec![0, 1, 4, 6]);
        assert_eq!(ruler.length(), 6);
        assert!(Ruler::from_markings(&[0, 2, 2]).is_err());
        assert!(Ruler::from_markings(&[1, 2]).is_err());
        assert!(Ruler::new(vec![]).is_err());
    }

    #[test]
    fn enumerates_in_lex_order() {
        let got = enumerate_golomb_rulers(3, 6, &mut Budget::unlimited()).unwrap();
        assert_eq!(got, vec![r(&[1, 3, 2]), r(&[2, 3, 1])]);
        let got = enumerate_golomb_rulers(2, 5, &mut Budget::unlimited()).unwrap();
        assert_eq!(got, vec![r(&[1, 4]), r(&[2, 3]), r(&[3, 2]), r(&[4, 1])]);
        for t in 1..6 {
            assert_eq!(enumerate_golomb_rulers(1, t, &mut Budget::unlimited()).unwrap(), vec![r(&[t])]);
        }
    }

    #[test]
    fn counts() {
        assert_eq!(count(3, 18), 98);
        assert_eq!(count(3, 35), 510);
        assert_eq!(count(2, 4), 2);
        assert_eq!(count(3, 0), 0);
        assert_eq!(count(1, 0), 0);
        assert_eq!(count(3, 5), 0);
    }

    #[test]
    fn split_by_first_gap_adds_up() {
        let total = count(4, 30);
        let parts: u64 =
            (1..=30).map(|z| count_with_first_gap(4, 30, Some(z), &mut Budget::unlimited()).unwrap()).sum();
        assert_eq!(total, parts);
    }

    #[test]
    fn complement_reverses() {
        assert_eq!(complement(&r(&[1, 3, 2])), r(&[2, 3, 1]));
        assert_eq!(complement(&r(&[7])), r(&[7]));
        assert_eq!(complement(&r(&[1, 4])), r(&[4, 1]));
    }

    #[test]
    fn optimal_lengths() {
        let mut b = Budget::unlimited();
        assert_eq!(optimal_length(1, 10, &mut b), Ok(1));
        assert_eq!(optimal_length(2, 10, &mut b), Ok(3));
        assert_eq!(optimal_length(3, 10, &mut b), Ok(6));
        assert_eq!(optimal_length(4, 20, &mut b), Ok(11));
        assert_eq!(optimal_length(4, 10, &mut b), Err(Error::CeilingExceeded { ceiling: 10 }));
    }

    #[test]
    fn budget_is_enforced() {
        let err = count_golomb_rulers(4, 40, &mut Budget::new(10)).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { limit: 10 });
    }

    #[test]
    fn dpcs_pairs_are_valid() {
        assert_eq!(dpcs_pairs(3).len(), 5);
        assert_eq!(dpcs_pairs(2), vec![DpcsPair { u: (1, 1), v: (2, 2) }]);
        assert!(dpcs_pairs(1).is_empty());
        assert!(DpcsPair::new((1, 2), (2, 3)).is_err());
    }
}
