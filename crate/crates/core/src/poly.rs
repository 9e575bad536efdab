//! Dense univariate polynomials over exact rationals.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Coefficients in ascending degree order (`coeffs[i]` multiplies `t^i`).
///
/// Trailing zeros are allowed in storage so that fixed-width coefficient
/// lists survive serialization; equality and [`Polynomial::degree`] ignore
/// them.
#[derive(Clone, Debug, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial { coeffs: vec![c] }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial { coeffs: coeffs.iter().map(|&c| rational::int(c)).collect() }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `t^i`, zero past the stored length.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    fn significant_len(&self) -> usize {
        self.coeffs.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1)
    }

    pub fn is_zero(&self) -> bool {
        self.significant_len() == 0
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.significant_len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.degree().map_or_else(Rational::zero, |d| self.coeffs[d].clone())
    }

    pub fn trimmed(mut self) -> Self {
        let n = self.significant_len();
        self.coeffs.truncate(n);
        self
    }

    /// Pads with zeros to exactly `len` coefficients. Fails if a nonzero
    /// coefficient would be cut.
    pub fn padded(mut self, len: usize) -> Option<Self> {
        if self.significant_len() > len {
            return None;
        }
        self.coeffs.resize(len, Rational::zero());
        self.coeffs.truncate(len);
        Some(self)
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_int(&self, t: i64) -> Rational {
        self.eval(&rational::int(t))
    }

    /// Multiplies by `(t - a)`.
    fn mul_linear(&self, a: &Rational) -> Polynomial {
        let mut out = vec![Rational::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + 1] += c;
            out[i] -= c * a;
        }
        Polynomial { coeffs: out }
    }

    /// The unique polynomial of degree below `points.len()` through the
    /// given points (Lagrange form expanded to monomials).
    pub fn interpolate(points: &[(Rational, Rational)]) -> Result<Polynomial> {
        let n = points.len();
        for i in 0..n {
            for j in 0..i {
                if points[i].0 == points[j].0 {
                    return Err(Error::InvalidArgument(alloc::format!(
                        "repeated interpolation node {}",
                        rational::to_canonical_string(&points[i].0)
                    )));
                }
            }
        }
        let mut acc = vec![Rational::zero(); n];
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = Polynomial::constant(Rational::one());
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = basis.mul_linear(xj);
                    denom *= xi - xj;
                }
            }
            let scale = yi / denom;
            for (a, b) in acc.iter_mut().zip(basis.coeffs.iter()) {
                *a += b * &scale;
            }
        }
        Ok(Polynomial { coeffs: acc })
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        let n = self.significant_len();
        n == other.significant_len() && self.coeffs[..n] == other.coeffs[..n]
    }
}

impl Eq for Polynomial {}

/// Renders as e.g. `1/2*t^3 - 3/2*t^2 + t`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(deg) = self.degree() else {
            return f.write_str("0");
        };
        let mut out = String::new();
        for i in (0..=deg).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                out.push_str(&rational::to_canonical_string(&mag));
            }
            if i > 0 {
                if show_mag {
                    out.push('*');
                }
                out.push('t');
                if i > 1 {
                    out.push('^');
                    out.push_str(&alloc::format!("{i}"));
                }
            }
        }
        f.write_str(&out)
    }
}
