//! Exact feasibility of strict homogeneous linear systems.
//!
//! Decides whether `{ z : a . z > 0 for every row a }` is nonempty. By
//! Gordan's alternative it is empty exactly when some nonnegative, nonzero
//! combination of the rows vanishes, so the solver runs a Phase-I simplex on
//!
//! ```text
//! lambda >= 0,   sum_i lambda_i a_i = 0,   sum_i lambda_i = 1
//! ```
//!
//! which has only `dim + 1` equality rows. The tableau is kept in integers
//! with fraction-free (Bareiss) pivoting, so every entry is a minor of the
//! input and stays small for `{-1, 0, 1}` rows. Both outcomes carry a
//! certificate that is checked before it is returned.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    /// Integer point with `a . z > 0` for every row.
    Feasible(Vec<i64>),
    /// Nonnegative multipliers, not all zero, with `sum lambda_i a_i = 0`.
    Infeasible(Vec<i64>),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

#[inline]
fn mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("simplex tableau entry overflow")
}

fn reduce(v: &mut [i64]) {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

fn dot(a: &[i64], z: &[i64]) -> i128 {
    a.iter().zip(z).map(|(&x, &y)| x as i128 * y as i128).sum()
}

/// Decides strict feasibility of `rows` (each of length `dim`).
pub fn strict_feasibility(rows: &[Vec<i64>], dim: usize) -> Feasibility {
    let k = rows.len();
    if k == 0 {
        return Feasibility::Feasible(vec![0; dim]);
    }
    let r = dim + 1;
    let cols = k + r;
    let rhs = cols;
    let width = cols + 1;
    // Constraint rows 0..r, objective row r.
    let mut t = vec![0i128; (r + 1) * width];
    for (j, row) in rows.iter().enumerate() {
        debug_assert_eq!(row.len(), dim);
        for (i, &a) in row.iter().enumerate() {
            t[i * width + j] = a as i128;
        }
        t[dim * width + j] = 1;
    }
    for i in 0..r {
        t[i * width + k + i] = 1;
    }
    t[dim * width + rhs] = 1;
    for j in 0..width {
        let s: i128 = (0..r).map(|i| t[i * width + j]).sum();
        t[r * width + j] = if (k..cols).contains(&j) { 0 } else { -s };
    }
    let mut basis: Vec<usize> = (k..cols).collect();
    let mut det: i128 = 1;

    loop {
        let obj = r * width;
        let Some(q) = (0..cols).find(|&j| t[obj + j] < 0) else {
            break;
        };
        let mut pivot: Option<usize> = None;
        for i in 0..r {
            let a = t[i * width + q];
            if a <= 0 {
                continue;
            }
            pivot = match pivot {
                None => Some(i),
                Some(p) => {
                    let lhs = mul(t[i * width + rhs], t[p * width + q]);
                    let rhs_ = mul(t[p * width + rhs], a);
                    if lhs < rhs_ || (lhs == rhs_ && basis[i] < basis[p]) {
                        Some(i)
                    } else {
                        Some(p)
                    }
                }
            };
        }
        // Phase I is bounded below by zero, so a pivot row always exists.
        let p = pivot.expect("phase-one simplex is bounded");
        let pq = t[p * width + q];
        for i in 0..=r {
            if i == p {
                continue;
            }
            let iq = t[i * width + q];
            for j in 0..width {
                let v = mul(t[i * width + j], pq) - mul(iq, t[p * width + j]);
                debug_assert_eq!(v % det, 0);
                t[i * width + j] = v / det;
            }
        }
        det = pq;
        basis[p] = q;
    }

    let obj = r * width;
    if t[obj + rhs] == 0 {
        let mut lambda = vec![0i64; k];
        for (i, &b) in basis.iter().enumerate() {
            if b < k {
                lambda[b] = i64::try_from(t[i * width + rhs]).expect("multiplier fits");
            }
        }
        reduce(&mut lambda);
        debug_assert!(lambda.iter().all(|&l| l >= 0) && lambda.iter().any(|&l| l > 0));
        for i in 0..dim {
            let s: i128 = lambda.iter().zip(rows).map(|(&l, row)| l as i128 * row[i] as i128).sum();
            assert_eq!(s, 0, "invalid infeasibility certificate");
        }
        Feasibility::Infeasible(lambda)
    } else {
        let mut z: Vec<i64> = (0..dim).map(|i| i64::try_from(t[obj + k + i] - det).expect("witness fits")).collect();
        reduce(&mut z);
        for row in rows {
            assert!(dot(row, &z) > 0, "invalid feasibility witness");
        }
        Feasibility::Feasible(z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_cases() {
        // z1 > 0, z2 - z1 > 0
        let f = strict_feasibility(&[vec![1, 0], vec![-1, 1]], 2);
        assert!(f.is_feasible());
        // z1 > z2 and z2 > z1
        let f = strict_feasibility(&[vec![1, -1], vec![-1, 1]], 2);
        assert_eq!(f, Feasibility::Infeasible(vec![1, 1]));
        // the eight-order counterexample pattern: z4>z1, z2>z4, z3>z2, (z1+z2)-(z3+z4)>0
        let rows = [vec![-1, 0, 0, 1], vec![0, 1, 0, -1], vec![0, -1, 1, 0], vec![1, 1, -1, -1]];
        let f = strict_feasibility(&rows, 4);
        assert!(!f.is_feasible());
        assert!(strict_feasibility(&[], 3).is_feasible());
    }

    #[test]
    fn degenerate_zero_row_is_infeasible() {
        assert!(!strict_feasibility(&[vec![0, 0, 0]], 3).is_feasible());
    }
}
