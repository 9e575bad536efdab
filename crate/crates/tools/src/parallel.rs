//! Multi-threaded drivers over the core enumerators.
//!
//! Work is split into tasks that do not depend on the thread count, each
//! task runs with its own node budget, and results are merged in task
//! order. Output and budget accounting are therefore identical for every
//! `jobs` value: a run fails with `BudgetExceeded` exactly when the summed
//! node count of its tasks exceeds what is left of the budget.

use std::sync::Mutex;

use golomb_core::arrangement::{denominator_lcm, vertex_constraints, vertices_with_first_constraint, RationalPoint};
use golomb_core::golomb::count_with_first_gap;
use golomb_core::golombgraph::{GolombOrientation, OrientationRule, OrientationSearch, RegionIndex};
use golomb_core::quasipoly::{
    golomb_quasipolynomial_from_counts, interpolate, interpolation_range, reciprocity_rows, GolombReciprocityRow,
    Quasipolynomial,
};
use golomb_core::{Budget, Error, Result};
use rayon::prelude::*;

/// Levels of the orientation search expanded before splitting.
const FRONTIER_DEPTH: usize = 10;

pub struct Runner {
    pool: rayon::ThreadPool,
    limit: u64,
    used: Mutex<u64>,
}

impl Runner {
    pub fn new(jobs: usize, budget: u64) -> std::result::Result<Self, String> {
        if jobs == 0 {
            return Err("--jobs must be at least 1".into());
        }
        if budget == 0 {
            return Err("--budget must be positive".into());
        }
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| e.to_string())?;
        Ok(Runner { pool, limit: budget, used: Mutex::new(0) })
    }

    /// Search nodes charged so far.
    pub fn used(&self) -> u64 {
        *self.used.lock().unwrap()
    }

    fn remaining(&self) -> u64 {
        self.limit - self.used()
    }

    fn account(&self, nodes: u64) -> Result<()> {
        let mut used = self.used.lock().unwrap();
        if nodes > self.limit - *used {
            *used = self.limit;
            return Err(Error::BudgetExceeded { limit: self.limit });
        }
        *used += nodes;
        Ok(())
    }

    /// Runs `f` on a fresh budget and charges what it used.
    pub fn serial<T>(&self, f: impl FnOnce(&mut Budget) -> Result<T>) -> Result<T> {
        let mut b = Budget::new(self.remaining());
        let out = f(&mut b);
        let charged = self.account(b.used());
        let out = out.map_err(|e| self.budget_error(e))?;
        charged.map(|_| out)
    }

    fn budget_error(&self, e: Error) -> Error {
        match e {
            Error::BudgetExceeded { .. } => Error::BudgetExceeded { limit: self.limit },
            e => e,
        }
    }

    /// Runs `f` on every task in parallel and returns results in task order.
    /// The first failing task (in task order) decides the error.
    pub fn map<I, T, F>(&self, tasks: Vec<I>, f: F) -> Result<Vec<T>>
    where
        I: Send,
        T: Send,
        F: Fn(I, &mut Budget) -> Result<T> + Sync,
    {
        let remaining = self.remaining();
        let results: Vec<(Result<T>, u64)> = self.pool.install(|| {
            tasks
                .into_par_iter()
                .map(|task| {
                    let mut b = Budget::new(remaining);
                    let r = f(task, &mut b);
                    (r, b.used())
                })
                .collect()
        });
        let nodes = results.iter().fold(0u64, |acc, (_, u)| acc.saturating_add(*u));
        let mut out = Vec::with_capacity(results.len());
        for (r, _) in results {
            out.push(r.map_err(|e| self.budget_error(e))?);
        }
        self.account(nodes)?;
        Ok(out)
    }

    /// `g_m(t)` for each requested `t`, split by the first gap.
    pub fn golomb_counts(&self, m: usize, ts: &[u64]) -> Result<Vec<u64>> {
        let tasks: Vec<(usize, u64, u64)> =
            ts.iter().enumerate().flat_map(|(i, &t)| (1..=t).map(move |g| (i, t, g))).collect();
        let parts = self.map(tasks.clone(), |(_, t, g), b| count_with_first_gap(m, t, Some(g), b))?;
        let mut out = vec![0u64; ts.len()];
        for ((i, _, _), c) in tasks.into_iter().zip(parts) {
            out[i] += c;
        }
        Ok(out)
    }

    pub fn orientation_count(&self, m: usize, rule: OrientationRule) -> Result<u64> {
        let search = OrientationSearch::new(m, rule)?;
        let nodes = self.serial(|b| search.frontier(FRONTIER_DEPTH, b))?;
        Ok(self.map(nodes, |node, b| search.count_from(&node, b))?.into_iter().sum())
    }

    pub fn orientations(&self, m: usize, rule: OrientationRule) -> Result<Vec<GolombOrientation>> {
        let search = OrientationSearch::new(m, rule)?;
        let nodes = self.serial(|b| search.frontier(FRONTIER_DEPTH, b))?;
        let parts = self.map(nodes, |node, b| {
            let mut v = Vec::new();
            search.for_each_from(&node, b, &mut |o| v.push(o))?;
            Ok(v)
        })?;
        Ok(parts.into_iter().flatten().collect())
    }

    pub fn region_index(&self, m: usize) -> Result<RegionIndex> {
        Ok(RegionIndex::from_orientations(m, self.orientations(m, OrientationRule::Realizable)?))
    }

    /// Sorted vertices of the simplex subdivision, split by the first
    /// constraint of each candidate subset.
    pub fn vertices(&self, m: usize) -> Result<Vec<RationalPoint>> {
        if m < 2 {
            return Ok(Vec::new());
        }
        let firsts: Vec<usize> = (0..vertex_constraints(m).len()).collect();
        let parts = self.map(firsts, |first, b| vertices_with_first_constraint(m, first, b))?;
        let mut all = std::collections::BTreeSet::new();
        for mut p in parts {
            all.append(&mut p);
        }
        Ok(all.into_iter().collect())
    }

    pub fn period_bound(&self, m: usize) -> Result<u64> {
        denominator_lcm(&self.vertices(m)?)
    }

    fn interpolation_data(&self, m: usize, period: u64) -> Result<Vec<(i64, u64)>> {
        if m == 0 || period == 0 {
            return Err(Error::InvalidArgument("m and the period must be positive".into()));
        }
        let ts: Vec<u64> = interpolation_range(m, period).collect();
        let counts = self.golomb_counts(m, &ts)?;
        Ok(ts.iter().map(|&t| t as i64).zip(counts).collect())
    }

    /// The ruler counting quasipolynomial interpolated at `period` (the
    /// vertex bound when `None`), with its leading coefficients checked.
    pub fn golomb_quasipolynomial(&self, m: usize, period: Option<u64>) -> Result<Quasipolynomial> {
        let p = match period {
            Some(p) => p,
            None => self.period_bound(m.max(1))?,
        };
        golomb_quasipolynomial_from_counts(m, p, self.interpolation_data(m, p)?)
    }

    /// Like [`Self::golomb_quasipolynomial`] without the leading coefficient
    /// check, so callers can report a failed check themselves.
    pub fn golomb_interpolant(&self, m: usize, period: u64) -> Result<Quasipolynomial> {
        let data = self.interpolation_data(m, period)?;
        interpolate(data.into_iter().map(|(t, c)| (t, c.into())), m - 1, period)
    }

    pub fn golomb_reciprocity(
        &self,
        q: &Quasipolynomial,
        regions: &RegionIndex,
        ts: &[u64],
    ) -> Result<Vec<GolombReciprocityRow>> {
        let rows = self.map(ts.to_vec(), |t, b| reciprocity_rows(q, regions, [t], b))?;
        Ok(rows.into_iter().flatten().collect())
    }
}
