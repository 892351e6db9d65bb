//! Partial fractions in the pole basis `1/(1 − α·z)^k`.

use super::field::{Field, Rational};
use super::poly::Poly;
use super::ratfunc::RationalFunction;
use super::series::TruncatedSeries;
use num_traits::Zero;

/// One term `coefficient / (1 − base·z)^order`.
#[derive(Clone, Debug)]
pub struct PoleTerm<F: Field> {
    pub base: F,
    pub order: usize,
    pub coefficient: F,
}

#[derive(Clone, Debug)]
pub struct PartialFractions<F: Field> {
    /// Polynomial part, exact over the rationals in every tier.
    pub poly_part: Poly,
    /// Grouped by base in the order the bases were supplied, orders ascending.
    pub terms: Vec<PoleTerm<F>>,
}

impl<F: Field> PartialFractions<F> {
    /// Taylor expansion of the decomposition at zero.
    pub fn expand(&self, order: usize) -> TruncatedSeries<F> {
        let mut acc = TruncatedSeries::from_poly(&self.poly_part.map(F::from_rational), order);
        for t in &self.terms {
            let s = TruncatedSeries::inverse_linear_power(&t.base, t.order, order)
                .scale(&t.coefficient);
            acc = &acc + &s;
        }
        acc
    }
}

/// Decomposes `f` given the reciprocal poles `α_i` and their multiplicities.
///
/// `f` must be reduced with denominator `c·Π(1 − α_i·z)^{m_i}`; the bases must
/// be distinct and nonzero.
pub fn decompose<F: Field>(f: &RationalFunction, bases: &[(F, usize)]) -> PartialFractions<F> {
    let den = f.denominator();
    let (poly_part, rem) = f.numerator().div_rem(den);
    let c = F::from_rational(&den.coeff(0));
    let rem_f: Poly<F> = rem.map(F::from_rational);

    let mut terms = Vec::new();
    for (i, (alpha, mult)) in bases.iter().enumerate() {
        let m = *mult;
        let order = m - 1;
        // substitute z = (1 − w)/α and expand around w = 0
        let inv_alpha = F::one() / alpha.clone();
        let z_of_w = TruncatedSeries::new(vec![inv_alpha.clone(), -inv_alpha], order);
        let mut num = TruncatedSeries::zero(order);
        for coef in rem_f.coeffs().iter().rev() {
            num = &num * &z_of_w;
            let c0 = num.coeff(0).clone() + coef.clone();
            let mut v = num.coeffs().to_vec();
            v[0] = c0;
            num = TruncatedSeries::new(v, order);
        }
        let mut rest = TruncatedSeries::new(vec![c.clone()], order);
        for (j, (beta, mj)) in bases.iter().enumerate() {
            if i == j {
                continue;
            }
            let ratio = beta.clone() / alpha.clone();
            let lin = TruncatedSeries::new(vec![F::one() - ratio.clone(), ratio], order);
            for _ in 0..*mj {
                rest = &rest * &lin;
            }
        }
        let h = num
            .div(&rest)
            .expect("distinct poles keep the cofactor invertible");
        for k in 1..=m {
            terms.push(PoleTerm {
                base: alpha.clone(),
                order: k,
                coefficient: h.coeff(m - k).clone(),
            });
        }
    }
    PartialFractions { poly_part, terms }
}

/// Rational-tier convenience: the reciprocal poles are read off the
/// denominator and must all be rational.
pub fn decompose_rational(f: &RationalFunction) -> Option<PartialFractions<Rational>> {
    let rev = f.denominator().reversed();
    if rev.degree() == Some(0) {
        return Some(decompose(f, &[]));
    }
    let roots = super::roots::factor_scalar_roots(&rev).ok()?;
    let mut bases = Vec::new();
    for (r, m) in roots.roots {
        let r = r.as_rational()?;
        if r.is_zero() {
            continue;
        }
        bases.push((r, m));
    }
    Some(decompose(f, &bases))
}
