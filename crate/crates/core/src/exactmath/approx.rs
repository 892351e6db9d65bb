//! Floating complex numbers that carry a forward-error certificate.
//!
//! Every operation widens `err` so that the exact result of the same
//! computation on the exact inputs lies within `err` of `(re, im)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, ToPrimitive, Zero};

use super::field::{Field, Rational};
use super::scalar::Scalar;

/// Unit roundoff for IEEE double precision.
const UNIT: f64 = f64::EPSILON / 2.0;

#[derive(Clone, Copy, Debug)]
pub struct ApproxComplex {
    pub re: f64,
    pub im: f64,
    pub err: f64,
}

impl ApproxComplex {
    pub fn new(re: f64, im: f64, err: f64) -> Self {
        debug_assert!(err >= 0.0 || err.is_nan());
        Self { re, im, err }
    }

    pub fn exact(re: f64, im: f64) -> Self {
        Self::new(re, im, 0.0)
    }

    pub fn abs(&self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re, -self.im, self.err)
    }

    fn rounded(re: f64, im: f64, err: f64, scale: f64) -> Self {
        let err = err + 4.0 * UNIT * scale;
        if re.is_finite() && im.is_finite() {
            Self::new(re, im, err)
        } else {
            Self::new(re, im, f64::INFINITY)
        }
    }

    /// Whether `other` could equal `self` given both certificates and an extra slack.
    pub fn overlaps(&self, other: &Self, slack: f64) -> bool {
        (self.re - other.re).hypot(self.im - other.im) <= self.err + other.err + slack
    }
}

impl Add for ApproxComplex {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let re = self.re + rhs.re;
        let im = self.im + rhs.im;
        Self::rounded(re, im, self.err + rhs.err, re.hypot(im))
    }
}

impl Sub for ApproxComplex {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for ApproxComplex {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im, self.err)
    }
}

impl Mul for ApproxComplex {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let re = self.re * rhs.re - self.im * rhs.im;
        let im = self.re * rhs.im + self.im * rhs.re;
        let (a, b) = (self.abs(), rhs.abs());
        let err = a * rhs.err + b * self.err + self.err * rhs.err;
        Self::rounded(re, im, err, a * b)
    }
}

impl Div for ApproxComplex {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let m = rhs.abs();
        if rhs.err >= m || m == 0.0 {
            return Self::new(f64::NAN, f64::NAN, f64::INFINITY);
        }
        let m2 = m * m;
        let inv = Self::rounded(
            rhs.re / m2,
            -rhs.im / m2,
            rhs.err / (m * (m - rhs.err)),
            1.0 / m,
        );
        self * inv
    }
}

impl fmt::Display for ApproxComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im == 0.0 {
            write!(f, "{:.12} (±{:.1e})", self.re, self.err)
        } else if self.im < 0.0 {
            write!(
                f,
                "{:.12} - {:.12}*i (±{:.1e})",
                self.re, -self.im, self.err
            )
        } else {
            write!(f, "{:.12} + {:.12}*i (±{:.1e})", self.re, self.im, self.err)
        }
    }
}

impl Zero for ApproxComplex {
    fn zero() -> Self {
        Self::exact(0.0, 0.0)
    }

    /// Zero is inside the error disk.
    fn is_zero(&self) -> bool {
        self.abs() <= self.err
    }
}

impl One for ApproxComplex {
    fn one() -> Self {
        Self::exact(1.0, 0.0)
    }
}

impl Field for ApproxComplex {
    fn from_rational(r: &Rational) -> Self {
        let v = r.to_f64().unwrap_or(f64::NAN);
        Self::rounded(v, 0.0, 0.0, v.abs())
    }

    fn is_exact() -> bool {
        false
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Approx(*self)
    }

    fn embed(s: &Scalar) -> Option<Self> {
        Some(match s {
            Scalar::Rational(r) => Self::from_rational(r),
            Scalar::Complex(c) => {
                Self::from_rational(&c.re) + Self::from_rational(&c.im) * Self::exact(0.0, 1.0)
            }
            Scalar::Quadratic(q) => {
                let d = q.radicand().to_f64()?;
                let root = d.abs().sqrt();
                let unit = if d < 0.0 { (0.0, root) } else { (root, 0.0) };
                let sqrt = Self::new(unit.0, unit.1, 2.0 * UNIT * root);
                Self::from_rational(q.base()) + Self::from_rational(q.coeff()) * sqrt
            }
            Scalar::Approx(a) => *a,
        })
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        let slack = self.err + other.err;
        if (self.re - other.re).abs() > slack {
            other.re.total_cmp(&self.re)
        } else if (self.im - other.im).abs() > slack {
            self.im.total_cmp(&other.im)
        } else {
            Ordering::Equal
        }
    }

    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::field::rat;

    #[test]
    fn certificate_covers_true_value() {
        // 1/3 · 3 should contain 1
        let third = ApproxComplex::from_rational(&rat(1, 3));
        let three = ApproxComplex::from_rational(&rat(3, 1));
        let prod = third * three;
        assert!(prod.overlaps(&ApproxComplex::one(), 0.0));
        assert!(prod.err < 1e-14);
    }

    #[test]
    fn division_by_uncertain_zero_is_unbounded() {
        let tiny = ApproxComplex::new(1e-20, 0.0, 1e-18);
        let q = ApproxComplex::one() / tiny;
        assert!(q.err.is_infinite());
    }

    #[test]
    fn is_zero_uses_certificate() {
        assert!(ApproxComplex::new(1e-14, 0.0, 1e-13).is_zero());
        assert!(!ApproxComplex::new(1e-12, 0.0, 1e-13).is_zero());
    }
}
