//! Exact linear algebra over the rationals.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Solves the square system `a * x = b` by Gaussian elimination.
/// Returns `None` when `a` is singular.
pub fn solve_unique(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n) && b.len() == n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = Rational::one() / &a[col][col];
        for k in col..n {
            a[col][k] = &a[col][k] * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for k in col..n {
                let delta = &factor * &a[col][k];
                a[r][k] -= delta;
            }
            let delta = &factor * &b[col];
            b[r] -= delta;
        }
    }
    Some(b)
}

/// Rank of a rational matrix.
pub fn rank(mut a: Vec<Vec<Rational>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            if a[i][col].is_zero() {
                continue;
            }
            let factor = &a[i][col] / &a[r][col];
            for k in col..cols {
                let delta = &factor * &a[r][k];
                a[i][k] -= delta;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}
