use num_traits::{One, Zero};

use super::field::Rational;
use super::poly::Poly;
use super::series::TruncatedSeries;
use crate::error::{Error, Result};

/// Quotient of two rational polynomials, kept coprime after [`reduce`](Self::reduce).
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction {
    numerator: Poly,
    denominator: Poly,
}

impl RationalFunction {
    /// Builds and reduces `numerator / denominator`.
    pub fn new(numerator: Poly, denominator: Poly) -> Self {
        assert!(!denominator.is_zero(), "zero denominator");
        Self {
            numerator,
            denominator,
        }
        .reduce()
    }

    /// Divides out the gcd and normalizes the denominator: constant term 1 when
    /// it is nonzero, monic otherwise.
    pub fn reduce(self) -> Self {
        let g = self.numerator.gcd(&self.denominator);
        let (mut num, mut den) = if g.is_zero() || g.degree() == Some(0) {
            (self.numerator, self.denominator)
        } else {
            (
                self.numerator.exact_div(&g).expect("gcd divides numerator"),
                self.denominator
                    .exact_div(&g)
                    .expect("gcd divides denominator"),
            )
        };
        let c0 = den.coeff(0);
        let norm = if !c0.is_zero() {
            c0
        } else {
            den.leading().cloned().expect("nonzero denominator")
        };
        let inv = Rational::one() / norm;
        num = num.scale(&inv);
        den = den.scale(&inv);
        if num.is_zero() {
            den = Poly::one();
        }
        Self {
            numerator: num,
            denominator: den,
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn denominator(&self) -> &Poly {
        &self.denominator
    }

    /// Value at `t`, or `None` at a pole.
    pub fn eval(&self, t: &Rational) -> Option<Rational> {
        let d = self.denominator.eval(t);
        if d.is_zero() {
            None
        } else {
            Some(self.numerator.eval(t) / d)
        }
    }

    /// Taylor expansion at zero through `order`.
    pub fn taylor(&self, order: usize) -> Result<TruncatedSeries> {
        if self.denominator.coeff(0).is_zero() {
            return Err(Error::Series("rational function has a pole at zero"));
        }
        let num = TruncatedSeries::from_poly(&self.numerator, order);
        let den = TruncatedSeries::from_poly(&self.denominator, order);
        num.div(&den)
    }
}
