//! The Golomb mixed graph and the orientations that index the regions of
//! the Golomb arrangement inside the simplex.
//!
//! Vertices are the proper consecutive subsets (intervals) of `{1..m}`. An
//! orientation of the complete graph on them is acyclic exactly when it is a
//! total order, so a region is stored as the ranking of all intervals by
//! their gap sums. A ranking is admissible when
//!
//! * it extends inclusion (`U ⊂ V` puts `U` first),
//! * it is shift consistent: for overlapping `A`, `B` with `W = A ∩ B`,
//!   `A` precedes `B` iff `A \ W` precedes `B \ W`, and
//! * (under [`OrientationRule::Realizable`]) some `z > 0` has gap sums in
//!   exactly that order.
//!
//! The first two conditions alone already admit a few unrealizable rankings
//! from `m = 4` on (122 rankings against 114 regions), which is why the
//! realizability test is part of the default rule.
//!
//! The search decides one pair of disjoint intervals at a time. Every
//! decision is closed under transitivity and shift consistency on a bitset
//! poset, and the resulting strict system is checked with the exact LP in
//! [`crate::lp`] unless the current witness point already satisfies it.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arrangement::{golomb_hyperplanes, Hyperplane};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::golomb::Ruler;
use crate::lp::{strict_feasibility, Feasibility};
use crate::mixedgraph::MixedGraph;

/// Largest `m` the bitset search supports (interval count must fit in 64).
pub const MAX_M: usize = 10;

/// The interval `{a, a+1, ..., b}` of `{1..m}`, 1-based and inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConsecutiveSubset {
    pub a: usize,
    pub b: usize,
}

impl ConsecutiveSubset {
    pub fn len(&self) -> usize {
        self.b + 1 - self.a
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, other: &ConsecutiveSubset) -> bool {
        self.a <= other.a && other.b <= self.b
    }

    pub fn is_disjoint(&self, other: &ConsecutiveSubset) -> bool {
        self.b < other.a || other.b < self.a
    }

    /// Mirror image under `j -> m + 1 - j`.
    pub fn mirrored(&self, m: usize) -> ConsecutiveSubset {
        ConsecutiveSubset { a: m + 1 - self.b, b: m + 1 - self.a }
    }

    pub fn sum(&self, z: &[u64]) -> u128 {
        z[self.a - 1..self.b].iter().map(|&x| x as u128).sum()
    }

    fn mask(&self) -> u64 {
        ((1u64 << self.len()) - 1) << (self.a - 1)
    }

    /// Digits of the members, e.g. `"23"` for `{2, 3}`; `"a..b"` once a
    /// member has two digits.
    pub fn label(&self) -> String {
        if self.b <= 9 {
            (self.a..=self.b).map(|j| char::from(b'0' + j as u8)).collect()
        } else {
            alloc::format!("{}..{}", self.a, self.b)
        }
    }

    pub fn parse_label(s: &str) -> Result<ConsecutiveSubset> {
        let bad = || Error::InvalidArgument(alloc::format!("bad interval label {s:?}"));
        if let Some((a, b)) = s.split_once("..") {
            let a: usize = a.parse().map_err(|_| bad())?;
            let b: usize = b.parse().map_err(|_| bad())?;
            return if 1 <= a && a <= b { Ok(ConsecutiveSubset { a, b }) } else { Err(bad()) };
        }
        let digits: Vec<usize> = s.bytes().map(|c| c.wrapping_sub(b'0') as usize).collect();
        if digits.is_empty() || digits.iter().any(|&d| d == 0 || d > 9) {
            return Err(bad());
        }
        if digits.windows(2).any(|w| w[1] != w[0] + 1) {
            return Err(bad());
        }
        Ok(ConsecutiveSubset { a: digits[0], b: *digits.last().unwrap() })
    }
}

/// All proper consecutive subsets of `{1..m}`, ordered by size then start.
pub fn consecutive_subsets(m: usize) -> Vec<ConsecutiveSubset> {
    let mut out = Vec::new();
    for len in 1..m {
        for a in 1..=m + 1 - len {
            out.push(ConsecutiveSubset { a, b: a + len - 1 });
        }
    }
    out
}

/// The Golomb graph on [`consecutive_subsets`]`(m)` (vertex `i` is the
/// `i`-th subset): arcs along strict inclusion, undirected edges elsewhere.
pub fn build_golomb_graph(m: usize) -> MixedGraph {
    let s = consecutive_subsets(m);
    let mut edges = Vec::new();
    let mut arcs = Vec::new();
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if s[j].contains(&s[i]) {
                arcs.push((i, j));
            } else if s[i].contains(&s[j]) {
                arcs.push((j, i));
            } else {
                edges.push((i, j));
            }
        }
    }
    MixedGraph::new(s.len(), edges, arcs).expect("Golomb graph is simple")
}

/// Which rankings count as orientations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OrientationRule {
    /// Inclusion, shift consistency and realizability by a positive point:
    /// exactly the regions of the arrangement.
    #[default]
    Realizable,
    /// Inclusion and shift consistency only.
    ShiftConsistent,
}

/// An acyclic orientation of the Golomb graph, stored as the ranking of the
/// intervals from smallest to largest gap sum.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GolombOrientation {
    m: usize,
    order: Vec<ConsecutiveSubset>,
}

impl GolombOrientation {
    /// Wraps a ranking after checking it is a permutation of the intervals
    /// that extends inclusion and is shift consistent.
    pub fn new(m: usize, order: Vec<ConsecutiveSubset>) -> Result<Self> {
        let mut sorted = order.clone();
        sorted.sort();
        let mut all = consecutive_subsets(m);
        all.sort();
        if sorted != all {
            return Err(Error::InvalidArgument("ranking is not a permutation of the proper intervals".into()));
        }
        let o = GolombOrientation { m, order };
        if !o.extends_inclusion() || !o.is_shift_consistent() {
            return Err(Error::InvalidArgument("ranking violates inclusion or shift consistency".into()));
        }
        Ok(o)
    }

    pub fn from_labels<S: AsRef<str>>(m: usize, labels: &[S]) -> Result<Self> {
        let order = labels.iter().map(|l| ConsecutiveSubset::parse_label(l.as_ref())).collect::<Result<Vec<_>>>()?;
        GolombOrientation::new(m, order)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> &[ConsecutiveSubset] {
        &self.order
    }

    pub fn labels(&self) -> Vec<String> {
        self.order.iter().map(ConsecutiveSubset::label).collect()
    }

    pub fn position(&self, s: &ConsecutiveSubset) -> Option<usize> {
        self.order.iter().position(|x| x == s)
    }

    pub fn precedes(&self, x: &ConsecutiveSubset, y: &ConsecutiveSubset) -> bool {
        self.position(x) < self.position(y)
    }

    fn ranks(&self) -> Vec<(ConsecutiveSubset, usize)> {
        let mut r: Vec<_> = self.order.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        r.sort();
        r
    }

    fn extends_inclusion(&self) -> bool {
        self.order.iter().enumerate().all(|(i, x)| self.order[i + 1..].iter().all(|y| !x.contains(y)))
    }

    fn is_shift_consistent(&self) -> bool {
        let ranks = self.ranks();
        let rank = |s: &ConsecutiveSubset| ranks[ranks.binary_search_by(|p| p.0.cmp(s)).unwrap()].1;
        let all = consecutive_subsets(self.m);
        for x in &all {
            for y in &all {
                if let Some((u, v)) = shift_partner(x, y) {
                    if (rank(x) < rank(y)) != (rank(&u) < rank(&v)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether `z` lies in the closed region: every interval precedes only
    /// intervals with a gap sum at least as large.
    pub fn is_compatible(&self, z: &[u64]) -> bool {
        let sums: Vec<u128> = self.order.iter().map(|s| s.sum(z)).collect();
        // `<=` is transitive, so neighbours suffice.
        sums.windows(2).all(|w| w[0] <= w[1])
    }

    /// The orientation obtained by reversing the ruler.
    pub fn complement(&self) -> GolombOrientation {
        GolombOrientation { m: self.m, order: self.order.iter().map(|s| s.mirrored(self.m)).collect() }
    }
}

/// Renders as `1 < 2 < 12 < 3 < 23`.
impl fmt::Display for GolombOrientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.order.iter().enumerate() {
            if i > 0 {
                f.write_str(" < ")?;
            }
            f.write_str(&s.label())?;
        }
        Ok(())
    }
}

/// The pair tied to `(x, y)` by shift consistency, if any: for overlapping
/// intervals the pair of differences, for disjoint intervals with a gap
/// between them the pair extended by that gap.
fn shift_partner(x: &ConsecutiveSubset, y: &ConsecutiveSubset) -> Option<(ConsecutiveSubset, ConsecutiveSubset)> {
    if x.contains(y) || y.contains(x) {
        return None;
    }
    let (l, r, swapped) = if x.a < y.a { (x, y, false) } else { (y, x, true) };
    // Adjacent intervals have no admissible common part.
    if l.b + 1 == r.a {
        return None;
    }
    // Overlapping [a, c'] and [b', d] reduce to [a, b'-1] and [c'+1, d];
    // disjoint [a, b] and [c, d] extend to [a, c-1] and [b+1, d]. Both are
    // the same formula, and it is an involution.
    let pair = (ConsecutiveSubset { a: l.a, b: r.a - 1 }, ConsecutiveSubset { a: l.b + 1, b: r.b });
    Some(if swapped { (pair.1, pair.0) } else { pair })
}

/// The orientation of a point whose interval sums are pairwise distinct
/// (a generic point of a region); `None` if two sums tie.
pub fn orientation_of_point(z: &[u64]) -> Option<GolombOrientation> {
    let m = z.len();
    let mut keyed: Vec<(u128, ConsecutiveSubset)> = consecutive_subsets(m).into_iter().map(|s| (s.sum(z), s)).collect();
    keyed.sort();
    if keyed.windows(2).any(|w| w[0].0 == w[1].0) {
        return None;
    }
    Some(GolombOrientation { m, order: keyed.into_iter().map(|(_, s)| s).collect() })
}

/// A partially decided search state: `less[x]` has bit `y` set when
/// interval `x` is known to precede interval `y`.
#[derive(Debug, Clone)]
pub struct SearchNode {
    less: Vec<u64>,
    witness: Vec<i64>,
    next_key: usize,
}

/// Orientation search for one `m`, optionally seeded with the strict
/// inequalities of a ruler.
#[derive(Debug, Clone)]
pub struct OrientationSearch {
    m: usize,
    rule: OrientationRule,
    subsets: Vec<ConsecutiveSubset>,
    /// partner[x * n + y] = shift partner of (x, y) as indices.
    partner: Vec<Option<(u8, u8)>>,
    /// Disjoint pairs (left, right) in the order they are decided.
    keys: Vec<(usize, usize)>,
    root: Option<SearchNode>,
}

impl OrientationSearch {
    pub fn new(m: usize, rule: OrientationRule) -> Result<Self> {
        let mut s = Self::skeleton(m, rule)?;
        let n = s.subsets.len();
        let mut less = vec![0u64; n];
        for i in 0..n {
            for j in 0..n {
                if i != j && s.subsets[j].contains(&s.subsets[i]) {
                    less[i] |= 1 << j;
                }
            }
        }
        s.root = Some(SearchNode { less, witness: vec![1; m], next_key: 0 });
        Ok(s)
    }

    /// Search restricted to orientations compatible with the ruler `z`
    /// (those whose closed region contains `z`).
    pub fn for_ruler(z: &[u64], rule: OrientationRule) -> Result<Self> {
        let mut s = Self::new(z.len(), rule)?;
        let n = s.subsets.len();
        let sums: Vec<u128> = s.subsets.iter().map(|x| x.sum(z)).collect();
        let mut node = s.root.take().expect("root");
        let mut ok = true;
        'outer: for x in 0..n {
            for y in 0..n {
                if sums[x] < sums[y] && !s.propagate(&mut node.less, x, y) {
                    ok = false;
                    break 'outer;
                }
            }
        }
        s.root = if ok && s.admit(&mut node) { Some(node) } else { None };
        Ok(s)
    }

    fn skeleton(m: usize, rule: OrientationRule) -> Result<Self> {
        if m == 0 || m > MAX_M {
            return Err(Error::InvalidArgument(alloc::format!("m must lie in 1..={MAX_M}, got {m}")));
        }
        let subsets = consecutive_subsets(m);
        let n = subsets.len();
        let index = |s: &ConsecutiveSubset| subsets.iter().position(|x| x == s).expect("proper interval");
        let mut partner = vec![None; n * n];
        let mut keys = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if let Some((u, v)) = shift_partner(&subsets[x], &subsets[y]) {
                    partner[x * n + y] = Some((index(&u) as u8, index(&v) as u8));
                }
            }
        }
        let mut ordered = subsets.clone();
        ordered.sort();
        for l in &ordered {
            for r in &ordered {
                if l.b < r.a {
                    keys.push((index(l), index(r)));
                }
            }
        }
        Ok(OrientationSearch { m, rule, subsets, partner, keys, root: None })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rule(&self) -> OrientationRule {
        self.rule
    }

    /// Adds `x < y` and everything it forces. Returns `false` on a cycle.
    fn propagate(&self, less: &mut [u64], x: usize, y: usize) -> bool {
        let n = self.subsets.len();
        let mut stack = vec![(x, y)];
        while let Some((x, y)) = stack.pop() {
            if less[x] >> y & 1 == 1 {
                continue;
            }
            if x == y || less[y] >> x & 1 == 1 {
                return false;
            }
            let succ = less[y] | 1 << y;
            for p in 0..n {
                if p != x && less[p] >> x & 1 == 0 {
                    continue;
                }
                let new = succ & !less[p];
                if new >> p & 1 == 1 {
                    return false;
                }
                less[p] |= new;
                let mut bits = new;
                while bits != 0 {
                    let q = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if let Some((u, v)) = self.partner[p * n + q] {
                        stack.push((u as usize, v as usize));
                    }
                }
            }
        }
        true
    }

    fn row(&self, lo: usize, hi: usize) -> Vec<i64> {
        let mut r = vec![0i64; self.m];
        let (l, h) = (self.subsets[lo].mask(), self.subsets[hi].mask());
        for (j, c) in r.iter_mut().enumerate() {
            *c = (h >> j & 1) as i64 - (l >> j & 1) as i64;
        }
        r
    }

    /// The strict system of a state: positivity plus every decided pair of
    /// disjoint intervals (all other decisions are implied by these).
    fn rows(&self, less: &[u64]) -> Vec<Vec<i64>> {
        let mut rows = Vec::with_capacity(self.m + self.keys.len());
        for j in 0..self.m {
            let mut e = vec![0i64; self.m];
            e[j] = 1;
            rows.push(e);
        }
        for &(l, r) in &self.keys {
            if less[l] >> r & 1 == 1 {
                rows.push(self.row(l, r));
            } else if less[r] >> l & 1 == 1 {
                rows.push(self.row(r, l));
            }
        }
        rows
    }

    /// Applies the realizability rule, refreshing the witness if needed.
    fn admit(&self, node: &mut SearchNode) -> bool {
        if self.rule == OrientationRule::ShiftConsistent {
            return true;
        }
        let rows = self.rows(&node.less);
        let ok =
            |z: &[i64]| rows.iter().all(|r| r.iter().zip(z).map(|(&a, &b)| a as i128 * b as i128).sum::<i128>() > 0);
        if ok(&node.witness) {
            return true;
        }
        match strict_feasibility(&rows, self.m) {
            Feasibility::Feasible(z) => {
                node.witness = z;
                true
            }
            Feasibility::Infeasible(_) => false,
        }
    }

    pub fn root(&self) -> Option<&SearchNode> {
        self.root.as_ref()
    }

    fn undecided(&self, node: &SearchNode) -> Option<usize> {
        (node.next_key..self.keys.len()).find(|&k| {
            let (l, r) = self.keys[k];
            node.less[l] >> r & 1 == 0 && node.less[r] >> l & 1 == 0
        })
    }

    /// Children of a node in search order; empty at a leaf.
    pub fn children(&self, node: &SearchNode, budget: &mut Budget) -> Result<Vec<SearchNode>> {
        budget.tick()?;
        let Some(k) = self.undecided(node) else {
            return Ok(Vec::new());
        };
        let (l, r) = self.keys[k];
        let mut out = Vec::with_capacity(2);
        for (x, y) in [(l, r), (r, l)] {
            let mut child = SearchNode { less: node.less.clone(), witness: node.witness.clone(), next_key: k + 1 };
            if self.propagate(&mut child.less, x, y) && self.admit(&mut child) {
                out.push(child);
            }
        }
        Ok(out)
    }

    pub fn is_leaf(&self, node: &SearchNode) -> bool {
        self.undecided(node).is_none()
    }

    fn orientation(&self, node: &SearchNode) -> GolombOrientation {
        let n = self.subsets.len();
        let mut ranked: Vec<(u32, ConsecutiveSubset)> =
            (0..n).map(|x| ((0..n).filter(|&p| node.less[p] >> x & 1 == 1).count() as u32, self.subsets[x])).collect();
        ranked.sort();
        GolombOrientation { m: self.m, order: ranked.into_iter().map(|(_, s)| s).collect() }
    }

    /// Open nodes after expanding `depth` levels, in depth-first order.
    /// Leaves reached early are kept. Enumerating each returned node and
    /// concatenating reproduces [`Self::for_each`] from the root.
    pub fn frontier(&self, depth: usize, budget: &mut Budget) -> Result<Vec<SearchNode>> {
        let mut level: Vec<SearchNode> = self.root.iter().cloned().collect();
        for _ in 0..depth {
            let mut next = Vec::new();
            for node in level {
                if self.is_leaf(&node) {
                    next.push(node);
                } else {
                    next.extend(self.children(&node, budget)?);
                }
            }
            level = next;
        }
        Ok(level)
    }

    /// Depth-first enumeration of the orientations below `node`.
    pub fn for_each_from<F>(&self, node: &SearchNode, budget: &mut Budget, f: &mut F) -> Result<()>
    where
        F: FnMut(GolombOrientation),
    {
        let kids = self.children(node, budget)?;
        if kids.is_empty() {
            if self.is_leaf(node) {
                f(self.orientation(node));
            }
            return Ok(());
        }
        for child in &kids {
            self.for_each_from(child, budget, f)?;
        }
        Ok(())
    }

    pub fn for_each<F>(&self, budget: &mut Budget, mut f: F) -> Result<()>
    where
        F: FnMut(GolombOrientation),
    {
        match &self.root {
            Some(root) => self.for_each_from(root, budget, &mut f),
            None => Ok(()),
        }
    }

    pub fn count_from(&self, node: &SearchNode, budget: &mut Budget) -> Result<u64> {
        let kids = self.children(node, budget)?;
        if kids.is_empty() {
            return Ok(self.is_leaf(node) as u64);
        }
        let mut n = 0;
        for child in &kids {
            n += self.count_from(child, budget)?;
        }
        Ok(n)
    }

    pub fn count(&self, budget: &mut Budget) -> Result<u64> {
        match &self.root {
            Some(root) => self.count_from(root, budget),
            None => Ok(0),
        }
    }
}

pub fn enumerate_orientations(m: usize, rule: OrientationRule, budget: &mut Budget) -> Result<Vec<GolombOrientation>> {
    let search = OrientationSearch::new(m, rule)?;
    let mut out = Vec::new();
    search.for_each(budget, |o| out.push(o))?;
    Ok(out)
}

/// The orientations indexing the regions of the Golomb arrangement.
pub fn enumerate_constrained_orientations(m: usize, budget: &mut Budget) -> Result<Vec<GolombOrientation>> {
    enumerate_orientations(m, OrientationRule::Realizable, budget)
}

pub fn count_constrained_orientations(m: usize, budget: &mut Budget) -> Result<u64> {
    OrientationSearch::new(m, OrientationRule::Realizable)?.count(budget)
}

/// Golomb multiplicity of a ruler with nonnegative gaps: the number of
/// regions whose closure contains it. For the zero vector this is the
/// number of regions.
pub fn multiplicity(z: &Ruler, budget: &mut Budget) -> Result<u64> {
    OrientationSearch::for_ruler(z.gaps(), OrientationRule::Realizable)?.count(budget)
}

/// All region orientations for one `m`, kept for repeated multiplicity
/// queries by filtering.
#[derive(Debug, Clone)]
pub struct RegionIndex {
    m: usize,
    orientations: Vec<GolombOrientation>,
}

impl RegionIndex {
    pub fn new(m: usize, budget: &mut Budget) -> Result<Self> {
        Ok(RegionIndex { m, orientations: enumerate_constrained_orientations(m, budget)? })
    }

    pub fn from_orientations(m: usize, orientations: Vec<GolombOrientation>) -> Self {
        RegionIndex { m, orientations }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn orientations(&self) -> &[GolombOrientation] {
        &self.orientations
    }

    pub fn len(&self) -> usize {
        self.orientations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orientations.is_empty()
    }

    pub fn multiplicity(&self, z: &[u64]) -> u64 {
        self.orientations.iter().filter(|o| o.is_compatible(z)).count() as u64
    }
}

/// Strict side of every arrangement hyperplane in the region of an
/// orientation, with an interior point of that region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionSigns {
    /// `(h, s)` with `s = -1` when `h . z < 0` in the region, `+1` when `> 0`.
    pub signs: Vec<(Hyperplane, i8)>,
    /// A positive integer point of the (scaled) region.
    pub witness: Vec<i64>,
}

pub fn region_sign_vector(o: &GolombOrientation) -> Result<RegionSigns> {
    let m = o.m();
    let mut rows: Vec<Vec<i64>> = (0..m)
        .map(|j| {
            let mut e = vec![0i64; m];
            e[j] = 1;
            e
        })
        .collect();
    for w in o.order().windows(2) {
        let mut r = vec![0i64; m];
        for j in w[1].a..=w[1].b {
            r[j - 1] += 1;
        }
        for j in w[0].a..=w[0].b {
            r[j - 1] -= 1;
        }
        rows.push(r);
    }
    let Feasibility::Feasible(witness) = strict_feasibility(&rows, m) else {
        return Err(Error::Unrealizable);
    };
    let signs = golomb_hyperplanes(m)
        .into_iter()
        .map(|h| {
            let v: i128 = h.normal().iter().zip(&witness).map(|(&c, &x)| c as i128 * x as i128).sum();
            debug_assert_ne!(v, 0);
            (h, if v < 0 { -1 } else { 1 })
        })
        .collect();
    Ok(RegionSigns { signs, witness })
}
