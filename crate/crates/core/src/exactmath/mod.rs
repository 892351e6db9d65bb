//! Exact arithmetic: the number tower, polynomials, rational functions,
//! truncated power series and polynomial-matrix linear algebra.

mod approx;
mod field;
mod gaussian;
pub mod matrix;
mod partial;
mod poly;
mod quadratic;
mod ratfunc;
pub mod roots;
mod scalar;
mod series;

pub use approx::ApproxComplex;
pub use field::{binomial, int, rat, Field, Rational};
pub use gaussian::{gaussian, ComplexRational};
pub use matrix::{char_poly, poly_adjugate, poly_det, poly_det_and_adjugate};
pub use partial::{decompose, decompose_rational, PartialFractions, PoleTerm};
pub use poly::Poly;
pub use quadratic::QuadraticElem;
pub use ratfunc::RationalFunction;
pub use roots::{factor_scalar_roots, RootFactorization};
pub use scalar::{Scalar, Tier};
pub use series::TruncatedSeries;

use num_traits::{Signed, Zero};

/// Partial fractions in whichever tier the denominator's roots require.
#[derive(Clone, Debug)]
pub enum AnyPartialFractions {
    Rational(PartialFractions<Rational>),
    Quadratic(PartialFractions<QuadraticElem>),
    Gaussian(PartialFractions<ComplexRational>),
    Approximate(PartialFractions<ApproxComplex>),
}

/// Decomposes `f` into `poly_part + Σ e/(1 − α·z)^k`, factoring the
/// denominator first. The denominator must not vanish at zero.
pub fn partial_fractions(f: &RationalFunction) -> crate::Result<AnyPartialFractions> {
    if f.denominator().coeff(0).is_zero() {
        return Err(crate::Error::Series("denominator vanishes at zero"));
    }
    let rev = f.denominator().reversed();
    let roots = if rev.degree() == Some(0) {
        RootFactorization {
            roots: Vec::new(),
            tier: Tier::Rational,
        }
    } else {
        factor_scalar_roots(&rev)?
    };
    fn bases<F: Field>(r: &RootFactorization) -> Vec<(F, usize)> {
        let mut out: Vec<(F, usize)> = r
            .roots
            .iter()
            .filter(|(s, _)| !s.same_value(&Scalar::Rational(Rational::zero())))
            .map(|(s, m)| (F::embed(s).expect("root belongs to the chosen tier"), *m))
            .collect();
        out.sort_by(|a, b| a.0.canonical_cmp(&b.0));
        out
    }
    Ok(match &roots.tier {
        Tier::Rational => AnyPartialFractions::Rational(decompose(f, &bases(&roots))),
        Tier::Quadratic(_) => AnyPartialFractions::Quadratic(decompose(f, &bases(&roots))),
        Tier::Gaussian => AnyPartialFractions::Gaussian(decompose(f, &bases(&roots))),
        Tier::Approximate => AnyPartialFractions::Approximate(decompose(f, &bases(&roots))),
    })
}

pub(crate) fn format_gaussian(c: &ComplexRational) -> String {
    if c.im.is_zero() {
        return c.re.to_string();
    }
    let im = if c.im.abs() == Rational::from_integer(1.into()) {
        "i".to_string()
    } else {
        format!("{}*i", c.im.abs())
    };
    if c.re.is_zero() {
        if c.im.is_negative() {
            format!("-{im}")
        } else {
            im
        }
    } else if c.im.is_negative() {
        format!("{} - {im}", c.re)
    } else {
        format!("{} + {im}", c.re)
    }
}
