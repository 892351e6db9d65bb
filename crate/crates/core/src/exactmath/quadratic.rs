//! Elements `a + b·√d` of a quadratic number field.
//!
//! The radicand travels with each element. An element with `b = 0` is a plain
//! rational and combines with elements of any field; two elements carrying
//! different radicands are never combined.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{Field, Rational};
use super::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct QuadraticElem {
    base: Rational,
    coeff: Rational,
    radicand: BigInt,
}

impl QuadraticElem {
    /// `base + coeff·√radicand`. The radicand must be square-free and not 0 or 1.
    pub fn new(base: Rational, coeff: Rational, radicand: BigInt) -> Self {
        assert!(
            !radicand.is_zero() && !radicand.is_one(),
            "radicand must not be 0 or 1"
        );
        debug_assert!(super::roots::is_square_free(&radicand));
        Self {
            base,
            coeff,
            radicand,
        }
    }

    pub fn rational(r: Rational) -> Self {
        Self {
            base: r,
            coeff: Rational::zero(),
            radicand: BigInt::one(),
        }
    }

    /// The element `√radicand` itself.
    pub fn sqrt(radicand: BigInt) -> Self {
        Self::new(Rational::zero(), Rational::one(), radicand)
    }

    pub fn base(&self) -> &Rational {
        &self.base
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    /// Radicand of the field this element lives in; `1` for a bare rational.
    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self {
            base: self.base.clone(),
            coeff: -self.coeff.clone(),
            radicand: self.radicand.clone(),
        }
    }

    /// Field norm `a² − d·b²`.
    pub fn norm(&self) -> Rational {
        &self.base * &self.base
            - &self.coeff * &self.coeff * Rational::from_integer(self.radicand.clone())
    }

    fn joint_radicand(&self, other: &Self) -> BigInt {
        if self.coeff.is_zero() {
            return other.radicand.clone();
        }
        if other.coeff.is_zero() {
            return self.radicand.clone();
        }
        assert_eq!(
            self.radicand, other.radicand,
            "mixing elements of different quadratic fields"
        );
        self.radicand.clone()
    }

    /// Sign of a real element (d > 0), computed exactly.
    fn real_sign(&self) -> Ordering {
        let a = self.base.signum();
        let b = self.coeff.signum();
        let zero = Rational::zero();
        if self.coeff.is_zero() {
            return self.base.cmp(&zero);
        }
        if a == b || self.base.is_zero() {
            return b.cmp(&zero);
        }
        // opposite signs: compare a² with d·b²
        let a2 = &self.base * &self.base;
        let b2d = &self.coeff * &self.coeff * Rational::from_integer(self.radicand.clone());
        match a2.cmp(&b2d) {
            Ordering::Greater => a.cmp(&zero),
            Ordering::Less => b.cmp(&zero),
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn is_real(&self) -> bool {
        self.coeff.is_zero() || self.radicand.is_positive()
    }

    pub fn to_complex_f64(&self) -> (f64, f64) {
        let a = self.base.to_f64().unwrap_or(f64::NAN);
        let b = self.coeff.to_f64().unwrap_or(f64::NAN);
        let d = self.radicand.to_f64().unwrap_or(f64::NAN);
        if self.coeff.is_zero() {
            (a, 0.0)
        } else if d > 0.0 {
            (a + b * d.sqrt(), 0.0)
        } else {
            (a, b * (-d).sqrt())
        }
    }
}

impl PartialEq for QuadraticElem {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base
            && self.coeff == other.coeff
            && (self.coeff.is_zero() || self.radicand == other.radicand)
    }
}

impl Eq for QuadraticElem {}

impl Add for QuadraticElem {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let d = self.joint_radicand(&rhs);
        Self {
            base: self.base + rhs.base,
            coeff: self.coeff + rhs.coeff,
            radicand: d,
        }
    }
}

impl Sub for QuadraticElem {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for QuadraticElem {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            base: -self.base,
            coeff: -self.coeff,
            radicand: self.radicand,
        }
    }
}

impl Mul for QuadraticElem {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let d = self.joint_radicand(&rhs);
        let dr = Rational::from_integer(d.clone());
        let base = &self.base * &rhs.base + &self.coeff * &rhs.coeff * dr;
        let coeff = &self.base * &rhs.coeff + &self.coeff * &rhs.base;
        Self {
            base,
            coeff,
            radicand: d,
        }
    }
}

impl Div for QuadraticElem {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let n = rhs.norm();
        assert!(!n.is_zero(), "division by zero in quadratic field");
        let inv = Self {
            base: rhs.base.clone() / n.clone(),
            coeff: -rhs.coeff.clone() / n,
            radicand: rhs.radicand.clone(),
        };
        self * inv
    }
}

impl fmt::Display for QuadraticElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_zero() {
            return write!(f, "{}", self.base);
        }
        let root = format!("sqrt({})", self.radicand);
        let c = if self.coeff.is_one() {
            root
        } else if (-self.coeff.clone()).is_one() {
            format!("-{root}")
        } else {
            format!("{}*{root}", self.coeff)
        };
        if self.base.is_zero() {
            write!(f, "{c}")
        } else if let Some(rest) = c.strip_prefix('-') {
            write!(f, "{} - {}", self.base, rest)
        } else {
            write!(f, "{} + {}", self.base, c)
        }
    }
}

impl Zero for QuadraticElem {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.base.is_zero() && self.coeff.is_zero()
    }
}

impl One for QuadraticElem {
    fn one() -> Self {
        Self::rational(Rational::one())
    }
}

impl Field for QuadraticElem {
    fn from_rational(r: &Rational) -> Self {
        Self::rational(r.clone())
    }

    fn is_exact() -> bool {
        true
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Quadratic(self.clone())
    }

    fn embed(s: &Scalar) -> Option<Self> {
        match s {
            Scalar::Quadratic(q) => Some(q.clone()),
            other => other.as_rational().map(Self::rational),
        }
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        let d = self.joint_radicand(other);
        if d.is_positive() || (self.coeff.is_zero() && other.coeff.is_zero()) {
            // real field: descending value
            let diff = self.clone() - other.clone();
            diff.real_sign().reverse()
        } else {
            // imaginary field: real part descending, imaginary part ascending
            other
                .base
                .cmp(&self.base)
                .then_with(|| self.coeff.cmp(&other.coeff))
        }
    }

    fn magnitude(&self) -> f64 {
        let (re, im) = self.to_complex_f64();
        re.hypot(im)
    }
}
