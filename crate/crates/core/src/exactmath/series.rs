//! Formal power series truncated at a fixed order `M`.
//!
//! A series of order `M` stores the coefficients of `z^0 ..= z^M`; every
//! operation is exact through that order.

use std::ops::{Add, Mul, Neg, Sub};

use super::field::{Field, Rational};
use super::poly::Poly;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct TruncatedSeries<F: Field = Rational> {
    coeffs: Vec<F>,
}

impl<F: Field> TruncatedSeries<F> {
    /// Pads or truncates `coeffs` to exactly `order + 1` entries.
    pub fn new(mut coeffs: Vec<F>, order: usize) -> Self {
        coeffs.resize(order + 1, F::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![F::one()], order)
    }

    pub fn from_poly(p: &Poly<F>, order: usize) -> Self {
        Self::new(p.coeffs().iter().take(order + 1).cloned().collect(), order)
    }

    /// The series `z`.
    pub fn var(order: usize) -> Self {
        Self::new(vec![F::zero(), F::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &F {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order());
        Self::new(self.coeffs[..=order].to_vec(), order)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::Series("inverse of a series with zero constant term"));
        }
        let inv0 = F::one() / c0.clone();
        let m = self.order();
        let mut out: Vec<F> = Vec::with_capacity(m + 1);
        out.push(inv0.clone());
        for n in 1..=m {
            let mut acc = F::zero();
            for k in 1..=n {
                acc = acc + self.coeffs[k].clone() * out[n - k].clone();
            }
            out.push(-(acc * inv0.clone()));
        }
        Ok(Self { coeffs: out })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    /// Formal derivative; the result has order `M − 1`.
    pub fn derivative(&self) -> Self {
        let m = self.order();
        if m == 0 {
            return Self::zero(0);
        }
        Self::new(
            (1..=m)
                .map(|k| self.coeffs[k].clone() * F::from_int(k as i64))
                .collect(),
            m - 1,
        )
    }

    /// Antiderivative with zero constant term, kept at the same order.
    pub fn integral(&self) -> Self {
        let m = self.order();
        let mut out = vec![F::zero()];
        for k in 0..m {
            out.push(self.coeffs[k].clone() / F::from_int(k as i64 + 1));
        }
        Self::new(out, m)
    }

    /// `exp(s)` for a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Series("exp of a series with nonzero constant term"));
        }
        // f = exp(g)  ⇒  n·f_n = Σ_{k=1}^{n} k·g_k·f_{n−k}
        let m = self.order();
        let weighted: Vec<F> = (0..=m)
            .map(|k| self.coeffs[k].clone() * F::from_int(k as i64))
            .collect();
        let mut out: Vec<F> = Vec::with_capacity(m + 1);
        out.push(F::one());
        for n in 1..=m {
            let mut acc = F::zero();
            for k in 1..=n {
                if !weighted[k].is_zero() {
                    acc = acc + weighted[k].clone() * out[n - k].clone();
                }
            }
            out.push(acc / F::from_int(n as i64));
        }
        Ok(Self { coeffs: out })
    }

    /// `log(s)` for a series with constant term one.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].same_as(&F::one()) {
            return Err(Error::Series(
                "log of a series whose constant term is not 1",
            ));
        }
        // g = log f  ⇒  n·g_n = n·f_n − Σ_{k=1}^{n−1} k·g_k·f_{n−k}
        let m = self.order();
        let mut out: Vec<F> = vec![F::zero(); m + 1];
        for n in 1..=m {
            let mut acc = self.coeffs[n].clone() * F::from_int(n as i64);
            for k in 1..n {
                acc = acc - out[k].clone() * F::from_int(k as i64) * self.coeffs[n - k].clone();
            }
            out[n] = acc / F::from_int(n as i64);
        }
        Ok(Self { coeffs: out })
    }

    /// `self(inner(z))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Series(
                "composition with an inner series of nonzero constant term",
            ));
        }
        let m = self.order().min(inner.order());
        let inner = inner.truncate(m);
        let mut acc = Self::zero(m);
        for c in self.coeffs[..=m].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] = acc.coeffs[0].clone() + c.clone();
        }
        Ok(acc)
    }

    /// Divide by `z`; the constant term must vanish. Order drops by one.
    pub fn shift_down(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Series(
                "division by z of a series with nonzero constant term",
            ));
        }
        let m = self.order();
        Ok(Self::new(self.coeffs[1..].to_vec(), m.saturating_sub(1)))
    }

    /// `(1 − a·z)^{-k}` for a positive integer `k`.
    pub fn inverse_linear_power(a: &F, k: usize, order: usize) -> Self {
        // coefficient of z^m is C(m+k−1, k−1)·a^m
        let mut out = Vec::with_capacity(order + 1);
        let mut binom = F::one();
        let mut apow = F::one();
        for m in 0..=order {
            if m > 0 {
                binom = binom * F::from_int((m + k - 1) as i64) / F::from_int(m as i64);
                apow = apow * a.clone();
            }
            out.push(binom.clone() * apow.clone());
        }
        Self::new(out, order)
    }

    /// `−log(1 − a·z) = Σ_{m≥1} a^m z^m / m`.
    pub fn neg_log_one_minus(a: &F, order: usize) -> Self {
        let mut out = vec![F::zero()];
        let mut apow = F::one();
        for m in 1..=order {
            apow = apow * a.clone();
            out.push(apow.clone() / F::from_int(m as i64));
        }
        Self::new(out, order)
    }

    /// `(1 − a·z)^{−b} = exp(−b·log(1 − a·z))` for an arbitrary exponent `b`.
    pub fn one_minus_pow(a: &F, b: &F, order: usize) -> Self {
        Self::neg_log_one_minus(a, order)
            .scale(b)
            .exp()
            .expect("log series has zero constant term")
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> TruncatedSeries<G> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl<F: Field + PartialEq> PartialEq for TruncatedSeries<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<F: Field> Add for &TruncatedSeries<F> {
    type Output = TruncatedSeries<F>;
    fn add(self, rhs: Self) -> TruncatedSeries<F> {
        let m = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=m)
                .map(|k| self.coeffs[k].clone() + rhs.coeffs[k].clone())
                .collect(),
        }
    }
}

impl<F: Field> Sub for &TruncatedSeries<F> {
    type Output = TruncatedSeries<F>;
    fn sub(self, rhs: Self) -> TruncatedSeries<F> {
        let m = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=m)
                .map(|k| self.coeffs[k].clone() - rhs.coeffs[k].clone())
                .collect(),
        }
    }
}

impl<F: Field> Mul for &TruncatedSeries<F> {
    type Output = TruncatedSeries<F>;
    fn mul(self, rhs: Self) -> TruncatedSeries<F> {
        let m = self.order().min(rhs.order());
        let mut out = vec![F::zero(); m + 1];
        for (i, a) in self.coeffs[..=m].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=m - i].iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

impl<F: Field> Neg for &TruncatedSeries<F> {
    type Output = TruncatedSeries<F>;
    fn neg(self) -> TruncatedSeries<F> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::field::{binomial, int, rat};
    use num_traits::One;

    type S = TruncatedSeries<Rational>;

    #[test]
    fn geometric_series() {
        let one_minus_z = S::new(vec![int(1), int(-1)], 8);
        let inv = one_minus_z.inverse().unwrap();
        assert!(inv.coeffs().iter().all(|c| c.is_one()));
        assert_eq!(S::inverse_linear_power(&int(1), 1, 8), inv);
    }

    #[test]
    fn exp_of_neg_log_is_geometric() {
        let l = S::neg_log_one_minus(&int(1), 12);
        let e = l.exp().unwrap();
        assert_eq!(e, S::inverse_linear_power(&int(1), 1, 12));
    }

    #[test]
    fn fractional_power() {
        // (1 − z)^{−1/2}: coefficients C(2m, m)/4^m
        let s = S::one_minus_pow(&int(1), &rat(1, 2), 10);
        for m in 0..=10u64 {
            let expected = Rational::new(
                binomial(2 * m, m),
                num_bigint::BigInt::from(4).pow(m as u32),
            );
            assert_eq!(s.coeff(m as usize), &expected);
        }
        let sq = &s * &s;
        assert_eq!(sq, S::inverse_linear_power(&int(1), 1, 10));
    }

    #[test]
    fn compose_z_over_one_minus_z() {
        // 1/(1 − w) with w = z/(1 − z) gives (1 − z)/(1 − 2z)
        let w = S::new(vec![int(0), int(1)], 10)
            .div(&S::new(vec![int(1), int(-1)], 10))
            .unwrap();
        let geo = S::inverse_linear_power(&int(1), 1, 10);
        let c = geo.compose(&w).unwrap();
        let expected = S::new(vec![int(1), int(-1)], 10)
            .div(&S::new(vec![int(1), int(-2)], 10))
            .unwrap();
        assert_eq!(c, expected);
    }

    #[test]
    fn domain_errors() {
        let s = S::new(vec![int(1), int(2)], 4);
        assert!(s.exp().is_err());
        assert!(S::var(4).log().is_err());
        assert!(S::var(4).inverse().is_err());
        assert!(s.compose(&s).is_err());
        assert!(s.shift_down().is_err());
    }

    #[test]
    fn derivative_and_integral() {
        let s = S::new(vec![int(0), int(3), int(4), int(5)], 3);
        assert_eq!(s.derivative().coeffs(), &[int(3), int(8), int(15)]);
        let back = s.derivative().integral();
        assert_eq!(back.coeffs(), &[int(0), int(3), int(4)]);
    }
}
