use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::approx::ApproxComplex;
use super::field::Rational;
use super::gaussian::ComplexRational;
use super::quadratic::QuadraticElem;

/// Which number system a computation's coefficients live in.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tier {
    Rational,
    /// `ℚ(√d)` for a square-free `d ∉ {0, 1, −1}`.
    Quadratic(BigInt),
    /// `ℚ(i)`.
    Gaussian,
    Approximate,
}

impl Tier {
    pub fn is_exact(&self) -> bool {
        !matches!(self, Tier::Approximate)
    }

    pub fn name(&self) -> String {
        match self {
            Tier::Rational => "rational".into(),
            Tier::Quadratic(d) => format!("quadratic(d={d})"),
            Tier::Gaussian => "gaussian".into(),
            Tier::Approximate => "approximate".into(),
        }
    }
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A value from any tier of the number tower.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rational(Rational),
    Quadratic(QuadraticElem),
    Complex(ComplexRational),
    Approx(ApproxComplex),
}

impl Scalar {
    /// Smallest tier that holds this value exactly.
    pub fn tier(&self) -> Tier {
        match self {
            Scalar::Rational(_) => Tier::Rational,
            Scalar::Quadratic(q) if q.is_rational() => Tier::Rational,
            Scalar::Quadratic(q) => Tier::Quadratic(q.radicand().clone()),
            Scalar::Complex(c) if c.im.is_zero() => Tier::Rational,
            Scalar::Complex(_) => Tier::Gaussian,
            Scalar::Approx(_) => Tier::Approximate,
        }
    }

    pub fn to_complex_f64(&self) -> (f64, f64) {
        match self {
            Scalar::Rational(r) => (r.to_f64().unwrap_or(f64::NAN), 0.0),
            Scalar::Quadratic(q) => q.to_complex_f64(),
            Scalar::Complex(c) => (
                c.re.to_f64().unwrap_or(f64::NAN),
                c.im.to_f64().unwrap_or(f64::NAN),
            ),
            Scalar::Approx(a) => (a.re, a.im),
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Scalar::Rational(r) => Some(r.clone()),
            Scalar::Quadratic(q) if q.is_rational() => Some(q.base().clone()),
            Scalar::Complex(c) if c.im.is_zero() => Some(c.re.clone()),
            _ => None,
        }
    }

    /// Exact structural equality; approximate values compare by certificate overlap.
    pub fn same_value(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Approx(a), Scalar::Approx(b)) => a.overlaps(b, 0.0),
            (Scalar::Approx(a), x) | (x, Scalar::Approx(a)) => {
                let (re, im) = x.to_complex_f64();
                a.overlaps(&ApproxComplex::exact(re, im), 1e-15 * re.hypot(im))
            }
            (Scalar::Quadratic(a), Scalar::Quadratic(b)) => a == b,
            (Scalar::Complex(a), Scalar::Complex(b)) => a == b,
            _ => match (self.as_rational(), other.as_rational()) {
                (Some(a), Some(b)) => a == b,
                _ => false,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Quadratic(q) => write!(f, "{q}"),
            Scalar::Complex(c) => write!(f, "{}", super::format_gaussian(c)),
            Scalar::Approx(a) => write!(f, "{a}"),
        }
    }
}
