use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::scalar::Scalar;

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// The arithmetic every coefficient type in the crate provides.
///
/// Exact implementors compare by value. [`ApproxComplex`](super::ApproxComplex)
/// answers [`Zero::is_zero`] with its error certificate, so "zero" there means
/// "indistinguishable from zero".
pub trait Field:
    Clone
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    fn from_rational(r: &Rational) -> Self;
    /// Whether values of this type are exact.
    fn is_exact() -> bool;
    fn to_scalar(&self) -> Scalar;
    /// Brings a tower value into this field, if it belongs there.
    fn embed(s: &Scalar) -> Option<Self>;

    /// Canonical root order: descending real part, then ascending imaginary part.
    fn canonical_cmp(&self, other: &Self) -> Ordering;

    /// Magnitude estimate used for relative tolerances.
    fn magnitude(&self) -> f64;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    fn from_bigint(n: &BigInt) -> Self {
        Self::from_rational(&Rational::from_integer(n.clone()))
    }

    fn pow(&self, exp: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// Equality up to the type's notion of zero.
    fn same_as(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).is_zero()
    }
}

impl Field for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn is_exact() -> bool {
        true
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Rational(self.clone())
    }

    fn embed(s: &Scalar) -> Option<Self> {
        s.as_rational()
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        other.cmp(self)
    }

    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }
}

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Binomial coefficient as a big integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
