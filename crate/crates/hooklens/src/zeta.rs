//! Dense polynomials in the marking variable ζ with exact integer coefficients.
//!
//! A `ZetaPoly` records a distribution over a small nonnegative statistic: the
//! coefficient of ζ^m is the (exact) number of objects whose statistic equals
//! m. Two evaluations matter throughout the crate:
//!
//! * ζ = 1 collapses the distribution to its total mass,
//! * d/dζ at ζ = 1 gives the first moment (the statistic summed over all
//!   objects).

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

/// Polynomial in ζ over the integers, stored densely by ascending power.
///
/// Invariant: the zero polynomial has an empty coefficient vector; otherwise
/// the trailing (highest-power) coefficient is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct ZetaPoly {
    coeffs: Vec<BigInt>,
}

impl ZetaPoly {
    pub fn zero() -> Self {
        ZetaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ZetaPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = ZetaPoly { coeffs: vec![c] };
        p.normalize();
        p
    }

    /// Builds a polynomial from ascending-power coefficients, trimming
    /// trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = ZetaPoly { coeffs };
        p.normalize();
        p
    }

    /// Convenience constructor for literals in tests and factor tables.
    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending-power coefficient slice (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of ζ^m (zero beyond the degree).
    pub fn coeff(&self, m: usize) -> BigInt {
        self.coeffs.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// In-place `self += f · g`.
    pub fn add_mul_assign(&mut self, f: &ZetaPoly, g: &ZetaPoly) {
        if f.is_zero() || g.is_zero() {
            return;
        }
        let deg = f.coeffs.len() + g.coeffs.len() - 2;
        if self.coeffs.len() <= deg {
            self.coeffs.resize(deg + 1, BigInt::zero());
        }
        for (i, fc) in f.coeffs.iter().enumerate() {
            if fc.is_zero() {
                continue;
            }
            for (j, gc) in g.coeffs.iter().enumerate() {
                if !gc.is_zero() {
                    self.coeffs[i + j] += fc * gc;
                }
            }
        }
        self.normalize();
    }

    pub fn pow(&self, exponent: usize) -> ZetaPoly {
        let mut acc = ZetaPoly::one();
        for _ in 0..exponent {
            acc = &acc * self;
        }
        acc
    }

    /// Value at ζ = 1: the sum of all coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Value of the derivative at ζ = 1: Σ m·c_m.
    pub fn derivative_eval_one(&self) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(m, c)| c * BigInt::from(m))
            .sum()
    }

    /// Horner evaluation at a complex point.
    ///
    /// Coefficients are rounded to `f64` first, so this is a diagnostic
    /// evaluation: exact only while every coefficient stays below 2^53.
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
        }
        acc
    }

    /// Sum of the coefficients of ζ^m over m ≡ a (mod b).
    pub fn residue_class_sum(&self, b: usize, a: usize) -> BigInt {
        debug_assert!(b >= 1 && a < b);
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(m, _)| m % b == a)
            .map(|(_, c)| c)
            .sum()
    }

    /// Decimal renderings of the coefficients, ascending power; used by the
    /// JSON report writers.
    pub fn coeffs_decimal(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl AddAssign<&ZetaPoly> for ZetaPoly {
    fn add_assign(&mut self, rhs: &ZetaPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (lhs, c) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *lhs += c;
        }
        self.normalize();
    }
}

impl Add<&ZetaPoly> for &ZetaPoly {
    type Output = ZetaPoly;
    fn add(self, rhs: &ZetaPoly) -> ZetaPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Mul<&ZetaPoly> for &ZetaPoly {
    type Output = ZetaPoly;
    fn mul(self, rhs: &ZetaPoly) -> ZetaPoly {
        let mut out = ZetaPoly::zero();
        out.add_mul_assign(self, rhs);
        out
    }
}

impl fmt::Display for ZetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.sign() == num_bigint::Sign::Minus {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let show_coeff = !mag.is_one() || m == 0;
            if show_coeff {
                write!(f, "{}", mag)?;
            }
            match m {
                0 => {}
                1 => write!(f, "z")?,
                _ => write!(f, "z^{}", m)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ZetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZetaPoly({})", self)
    }
}
