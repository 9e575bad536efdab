//! Mixed graphs: proper colorings, chromatic polynomials, acyclic
//! orientations and the coloring reciprocity they satisfy.
//!
//! Undirected edges `{u, v}` ask for `c(u) != c(v)`, arcs `(u, v)` for
//! `c(u) < c(v)`. Vertices are `0..n` internally; files and error messages
//! use 1-based labels.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    arcs: Vec<(usize, usize)>,
}

impl MixedGraph {
    /// Validates a simple mixed graph on vertices `0..n`. Edges are stored
    /// as `(min, max)`; both lists are sorted.
    pub fn new(n: usize, edges: Vec<(usize, usize)>, arcs: Vec<(usize, usize)>) -> Result<Self> {
        let label = |(u, v): (usize, usize)| alloc::format!("({}, {})", u + 1, v + 1);
        let range = |p: (usize, usize), kind: &str| -> Result<()> {
            if p.0 >= n || p.1 >= n {
                return Err(Error::InvalidGraph(alloc::format!("{kind} {} has a vertex outside 1..={n}", label(p))));
            }
            if p.0 == p.1 {
                return Err(Error::InvalidGraph(alloc::format!("{kind} {} is a loop", label(p))));
            }
            Ok(())
        };
        // Opposite arcs (u, v), (v, u) are distinct pairs and allowed; they
        // make the graph cyclic rather than invalid.
        let mut edge_set = BTreeSet::new();
        let mut arc_set = BTreeSet::new();
        for &e in &edges {
            range(e, "edge")?;
            let key = (e.0.min(e.1), e.0.max(e.1));
            if !edge_set.insert(key) {
                return Err(Error::InvalidGraph(alloc::format!("edge {} is repeated", label(e))));
            }
        }
        for &a in &arcs {
            range(a, "arc")?;
            if !arc_set.insert(a) {
                return Err(Error::InvalidGraph(alloc::format!("arc {} is repeated", label(a))));
            }
            if edge_set.contains(&(a.0.min(a.1), a.0.max(a.1))) {
                return Err(Error::InvalidGraph(alloc::format!("arc {} conflicts with an undirected edge", label(a))));
            }
        }
        let mut edges: Vec<_> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        let mut arcs = arcs;
        arcs.sort_unstable();
        Ok(MixedGraph { n, edges, arcs })
    }

    /// Same as [`MixedGraph::new`] with 1-based vertex labels.
    pub fn from_one_based(n: usize, edges: &[(usize, usize)], arcs: &[(usize, usize)]) -> Result<Self> {
        let shift = |p: &(usize, usize)| -> Result<(usize, usize)> {
            if p.0 == 0 || p.1 == 0 {
                return Err(Error::InvalidGraph(alloc::format!(
                    "pair ({}, {}) uses label 0; labels start at 1",
                    p.0,
                    p.1
                )));
            }
            Ok((p.0 - 1, p.1 - 1))
        };
        let e = edges.iter().map(shift).collect::<Result<Vec<_>>>()?;
        let a = arcs.iter().map(shift).collect::<Result<Vec<_>>>()?;
        MixedGraph::new(n, e, a)
    }

    pub fn edgeless(n: usize) -> Self {
        MixedGraph { n, edges: Vec::new(), arcs: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }
}

fn is_dag(n: usize, arcs: impl Iterator<Item = (usize, usize)>) -> bool {
    let mut out = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for (u, v) in arcs {
        out[u].push(v);
        indeg[v] += 1;
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(u) = stack.pop() {
        seen += 1;
        for &v in &out[u] {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                stack.push(v);
            }
        }
    }
    seen == n
}

/// Whether the arcs alone form a DAG (the undirected edges never matter).
pub fn is_acyclic_mixed(g: &MixedGraph) -> bool {
    is_dag(g.n, g.arcs.iter().copied())
}

/// Number of proper colorings `V -> {1..t}`.
pub fn count_proper_colorings(g: &MixedGraph, t: u64, budget: &mut Budget) -> Result<u64> {
    // constraints[v]: (u, kind) with u < v; kind 0 = differ, 1 = c(u) < c(v), 2 = c(u) > c(v)
    let mut constraints = vec![Vec::new(); g.n];
    for &(u, v) in &g.edges {
        constraints[v].push((u, 0u8));
    }
    for &(u, v) in &g.arcs {
        if u < v {
            constraints[v].push((u, 1));
        } else {
            constraints[u].push((v, 2));
        }
    }
    let mut colors = vec![0u64; g.n];
    fn go(v: usize, t: u64, cons: &[Vec<(usize, u8)>], colors: &mut [u64], budget: &mut Budget) -> Result<u64> {
        if v == colors.len() {
            return Ok(1);
        }
        let mut total = 0;
        for c in 1..=t {
            budget.tick()?;
            let ok = cons[v].iter().all(|&(u, kind)| match kind {
                0 => colors[u] != c,
                1 => colors[u] < c,
                _ => colors[u] > c,
            });
            if ok {
                colors[v] = c;
                total += go(v + 1, t, cons, colors, budget)?;
            }
        }
        Ok(total)
    }
    go(0, t, &constraints, &mut colors, budget)
}

/// The chromatic polynomial: zero when the arcs contain a cycle, otherwise
/// the degree-`n` polynomial through the color counts at `t = 0..=n`.
pub fn chromatic_polynomial(g: &MixedGraph, budget: &mut Budget) -> Result<Polynomial> {
    if !is_acyclic_mixed(g) {
        return Ok(Polynomial::zero());
    }
    let mut points = Vec::with_capacity(g.n + 1);
    for t in 0..=g.n as u64 {
        let c = count_proper_colorings(g, t, budget)?;
        points.push((rational::int(t as i64), Rational::from_integer(c.into())));
    }
    Ok(Polynomial::interpolate(&points)?.trimmed())
}

/// A direction for each undirected edge; arcs keep theirs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Orientation {
    /// `forward[i]` orients `edges()[i] = (u, v)` as `u -> v`.
    pub forward: Vec<bool>,
}

impl Orientation {
    /// All directed edges: the oriented edges followed by the arcs.
    pub fn directed_edges(&self, g: &MixedGraph) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> =
            g.edges.iter().zip(&self.forward).map(|(&(u, v), &f)| if f { (u, v) } else { (v, u) }).collect();
        out.extend_from_slice(&g.arcs);
        out
    }

    pub fn is_acyclic(&self, g: &MixedGraph) -> bool {
        is_dag(g.n, self.directed_edges(g).into_iter())
    }

    /// A topological order of the oriented graph, taking the smallest
    /// available vertex first. Unique when the underlying graph is complete.
    pub fn linear_order(&self, g: &MixedGraph) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; g.n];
        let mut out = vec![Vec::new(); g.n];
        for (u, v) in self.directed_edges(g) {
            out[u].push(v);
            indeg[v] += 1;
        }
        let mut ready: BTreeSet<usize> = (0..g.n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(g.n);
        while let Some(u) = ready.pop_first() {
            order.push(u);
            for &v in &out[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    ready.insert(v);
                }
            }
        }
        (order.len() == g.n).then_some(order)
    }

    /// Whether `c(u) <= c(v)` along every directed edge.
    pub fn is_compatible(&self, g: &MixedGraph, c: &[i64]) -> bool {
        self.directed_edges(g).iter().all(|&(u, v)| c[u] <= c[v])
    }
}

/// All acyclic orientations, ordered by the bit pattern of reversed edges
/// (edge 0 is the least significant bit).
pub fn enumerate_acyclic_orientations(g: &MixedGraph, budget: &mut Budget) -> Result<Vec<Orientation>> {
    let e = g.edges.len();
    if e >= 63 {
        return Err(Error::BudgetExceeded { limit: budget.limit() });
    }
    budget.charge(1u64 << e)?;
    let mut out = Vec::new();
    for mask in 0u64..1 << e {
        let o = Orientation { forward: (0..e).map(|i| mask >> i & 1 == 0).collect() };
        if o.is_acyclic(g) {
            out.push(o);
        }
    }
    Ok(out)
}

/// Number of acyclic orientations compatible with the coloring `c`.
pub fn compatible_orientation_count(g: &MixedGraph, c: &[i64], budget: &mut Budget) -> Result<u64> {
    if c.len() != g.n {
        return Err(Error::InvalidArgument(alloc::format!("coloring has {} entries for {} vertices", c.len(), g.n)));
    }
    let orientations = enumerate_acyclic_orientations(g, budget)?;
    Ok(orientations.iter().filter(|o| o.is_compatible(g, c)).count() as u64)
}

/// Both sides of the coloring reciprocity at one `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedReciprocity {
    pub t: u64,
    /// `(-1)^n chi(-t)`.
    pub lhs: Rational,
    /// Sum over colorings `V -> {0..t-1}` of the number of compatible
    /// acyclic orientations. Colorings that break an arc contribute zero.
    pub rhs: u64,
}

impl MixedReciprocity {
    pub fn holds(&self) -> bool {
        self.lhs == Rational::from_integer(self.rhs.into())
    }
}

/// Checks `(-1)^n chi(-t)` against the multiplicity-weighted colorings with
/// values in `{0..t-1}`, i.e. the lattice points of `(t-1)` times the order
/// polytope of the arcs. Compatibility only depends on the relative order
/// of colors, so using `{1..t}` instead gives the same total.
pub fn reciprocity_check_mixed(g: &MixedGraph, t: u64, budget: &mut Budget) -> Result<MixedReciprocity> {
    let chi = chromatic_polynomial(g, budget)?;
    let mut lhs = chi.eval_int(-(t as i64));
    if g.n % 2 == 1 {
        lhs = -lhs;
    }
    let orientations = enumerate_acyclic_orientations(g, budget)?;
    let directed: Vec<Vec<(usize, usize)>> = orientations.iter().map(|o| o.directed_edges(g)).collect();
    let mut rhs = 0u64;
    if t > 0 || g.n == 0 {
        let mut c = vec![0i64; g.n];
        loop {
            budget.tick()?;
            rhs += directed.iter().filter(|d| d.iter().all(|&(u, v)| c[u] <= c[v])).count() as u64;
            // odometer over {0..t-1}^n
            let mut i = 0;
            while i < g.n {
                c[i] += 1;
                if (c[i] as u64) < t {
                    break;
                }
                c[i] = 0;
                i += 1;
            }
            if i == g.n {
                break;
            }
        }
    }
    Ok(MixedReciprocity { t, lhs, rhs })
}

/// Least number of colors admitting a proper coloring, `None` if the arcs
/// contain a cycle. An acyclic graph is always `n`-colorable.
pub fn chromatic_number(g: &MixedGraph, budget: &mut Budget) -> Result<Option<u64>> {
    if !is_acyclic_mixed(g) {
        return Ok(None);
    }
    for t in 1..=g.n.max(1) as u64 {
        if count_proper_colorings(g, t, budget)? > 0 {
            return Ok(Some(t));
        }
    }
    unreachable!("acyclic mixed graphs are n-colorable")
}

/// Number of distinct edge-sign patterns over all vertex rankings that
/// respect the arcs: the regions of the edge arrangement that meet the
/// order polytope, counted without forming any orientation.
pub fn ranking_region_count(g: &MixedGraph, budget: &mut Budget) -> Result<u64> {
    let mut preds = vec![0u64; g.n];
    for &(u, v) in &g.arcs {
        preds[v] |= 1 << u;
    }
    let mut cells = BTreeSet::new();
    let mut pos = vec![usize::MAX; g.n];
    #[allow(clippy::too_many_arguments)]
    fn go(
        k: usize,
        placed: u64,
        g: &MixedGraph,
        preds: &[u64],
        pos: &mut [usize],
        cells: &mut BTreeSet<Vec<bool>>,
        budget: &mut Budget,
    ) -> Result<()> {
        budget.tick()?;
        if k == g.n {
            cells.insert(g.edges.iter().map(|&(u, v)| pos[u] < pos[v]).collect());
            return Ok(());
        }
        for v in 0..g.n {
            if placed >> v & 1 == 0 && preds[v] & !placed == 0 {
                pos[v] = k;
                go(k + 1, placed | 1 << v, g, preds, pos, cells, budget)?;
                pos[v] = usize::MAX;
            }
        }
        Ok(())
    }
    if g.n > 63 {
        return Err(Error::InvalidArgument("at most 63 vertices".into()));
    }
    go(0, 0, g, &preds, &mut pos, &mut cells, budget)?;
    Ok(cells.len() as u64)
}
