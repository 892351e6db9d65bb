use std::cmp::Ordering;

use num_complex::Complex;
use num_traits::{ToPrimitive, Zero};

use super::field::{Field, Rational};
use super::scalar::Scalar;

/// Gaussian rational `re + im·i`.
pub type ComplexRational = Complex<Rational>;

pub fn gaussian(re: Rational, im: Rational) -> ComplexRational {
    Complex::new(re, im)
}

impl Field for ComplexRational {
    fn from_rational(r: &Rational) -> Self {
        Complex::new(r.clone(), Rational::zero())
    }

    fn is_exact() -> bool {
        true
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Complex(self.clone())
    }

    fn embed(s: &Scalar) -> Option<Self> {
        match s {
            Scalar::Complex(c) => Some(c.clone()),
            other => other
                .as_rational()
                .map(|r| Complex::new(r, Rational::zero())),
        }
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        other.re.cmp(&self.re).then_with(|| self.im.cmp(&other.im))
    }

    fn magnitude(&self) -> f64 {
        let re = self.re.to_f64().unwrap_or(f64::INFINITY);
        let im = self.im.to_f64().unwrap_or(f64::INFINITY);
        re.hypot(im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::field::{int, rat};

    #[test]
    fn conjugation_is_multiplicative() {
        let x = gaussian(rat(-57, 130), rat(1, 130));
        let y = gaussian(int(1), int(1));
        assert_eq!((x.clone() * y.clone()).conj(), x.conj() * y.conj());
    }

    #[test]
    fn exact_division() {
        // (−57−i)/130 / (1−i) + (−57+i)/130 / (1+i) = −56/130 − ... checked via conj symmetry
        let beta = gaussian(rat(-57, 130), rat(1, 130));
        let alpha = gaussian(int(1), int(1));
        let s = beta.clone() / alpha.clone() + beta.conj() / alpha.conj();
        assert!(s.im.is_zero());
        assert_eq!(s.re, rat(-28, 65));
    }

    #[test]
    fn canonical_order() {
        let i = gaussian(int(0), int(1));
        let mi = gaussian(int(0), int(-1));
        let six = gaussian(int(6), int(0));
        let mut v = vec![i.clone(), six.clone(), mi.clone()];
        v.sort_by(|a, b| a.canonical_cmp(b));
        assert_eq!(v, vec![six, mi, i]);
    }
}
