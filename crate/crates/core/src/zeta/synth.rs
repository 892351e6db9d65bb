use num_traits::Zero;

use super::closed_form::{AnyClosedForm, ExpTerm, Factor, ZetaClosedForm};
use crate::category::AdjacencyMatrix;
use crate::error::{Error, Result};
use crate::exactmath::roots::joint_tier;
use crate::exactmath::{
    binomial, partial_fractions, AnyPartialFractions, ApproxComplex, Field, PartialFractions,
    Rational, Tier, TruncatedSeries,
};
use crate::nerve::{chain_counts, degenerate_generating_function, log_zeta_series, DEFAULT_ORDER};

/// `exp(Σ_{m=1}^{M} N_m z^m / m)`, exact.
pub fn zeta_series(a: &AdjacencyMatrix, order: usize) -> TruncatedSeries {
    log_zeta_series(&chain_counts(a, order))
        .exp()
        .expect("log series has zero constant term")
}

/// Writes the zeta function of `a` in the product-of-powers shape.
///
/// The generating function `Σ N_m z^m` is split into partial fractions
/// `p(z) + Σ e_{i,k}/(1 − α_i z)^k`. Since
/// `C(m+k−1, k−1) = Σ_j C(k−1, j)·C(m, j)`, the chain counts become
/// `N_m = Σ_i Σ_j g_{i,j} C(m, j) α_i^m + p_m` with `g_{i,j} = Σ_k e_{i,k} C(k−1, j)`.
/// Each `g_{i,0}` is an exponent; each `g_{i,j}`, `j ≥ 1`, an exp-term.
pub fn synthesize_closed_form(a: &AdjacencyMatrix) -> Result<AnyClosedForm> {
    let g = degenerate_generating_function(a);
    Ok(match partial_fractions(&g)? {
        AnyPartialFractions::Rational(p) => {
            AnyClosedForm::Rational(from_partial(&p, Tier::Rational))
        }
        AnyPartialFractions::Quadratic(p) => {
            let tier = joint_tier(
                p.terms
                    .iter()
                    .map(|t| t.base.to_scalar())
                    .collect::<Vec<_>>()
                    .iter(),
            );
            AnyClosedForm::Quadratic(from_partial(&p, tier))
        }
        AnyPartialFractions::Gaussian(p) => {
            AnyClosedForm::Gaussian(from_partial(&p, Tier::Gaussian))
        }
        AnyPartialFractions::Approximate(p) => {
            let form = from_partial(&p, Tier::Approximate);
            let check = expansion_error(
                &AnyClosedForm::Approximate(form.clone()),
                a,
                DEFAULT_ORDER.min(20),
            )?;
            if check > crate::zeta::DEFAULT_TOLERANCE {
                return Err(Error::NumericFailure(format!(
                    "closed form reproduces the zeta series only to relative error {check:e}"
                )));
            }
            AnyClosedForm::Approximate(form)
        }
    })
}

fn from_partial<F: Field>(pf: &PartialFractions<F>, tier: Tier) -> ZetaClosedForm<F> {
    let mut factors = Vec::new();
    let mut exp_terms = Vec::new();
    let mut start = 0;
    while start < pf.terms.len() {
        let alpha = pf.terms[start].base.clone();
        let mut end = start;
        while end < pf.terms.len() && pf.terms[end].base.same_as(&alpha) {
            end += 1;
        }
        // terms[start..end] hold e_k for k = 1..=m in order
        let e: Vec<&F> = pf.terms[start..end]
            .iter()
            .map(|t| &t.coefficient)
            .collect();
        let m = e.len();
        for j in 0..m {
            let mut g = F::zero();
            for k in (j + 1)..=m {
                let c = F::from_bigint(&binomial((k - 1) as u64, j as u64));
                g = g + e[k - 1].clone() * c;
            }
            if j == 0 {
                factors.push(Factor {
                    alpha: alpha.clone(),
                    beta: g,
                });
            } else {
                exp_terms.push(ExpTerm {
                    gamma: g * alpha.pow(j),
                    delta: alpha.clone(),
                    j,
                });
            }
        }
        start = end;
    }
    for (j, p) in pf.poly_part.coeffs().iter().enumerate().skip(1) {
        if !p.is_zero() {
            exp_terms.push(ExpTerm {
                gamma: F::from_rational(p),
                delta: F::zero(),
                j,
            });
        }
    }
    ZetaClosedForm::new(factors, exp_terms, tier)
}

/// Largest relative coefficient error of the closed form's expansion against
/// the exact zeta series; zero means exact agreement.
pub fn expansion_error(form: &AnyClosedForm, a: &AdjacencyMatrix, order: usize) -> Result<f64> {
    let exact = zeta_series(a, order);
    if let Some(s) = form.expand_rational(order) {
        return Ok(if s == exact { 0.0 } else { f64::INFINITY });
    }
    if form.tier().is_exact() {
        // an exact form whose expansion leaves the rationals cannot match
        return Ok(f64::INFINITY);
    }
    let approx = form.expand_approx(order)?;
    Ok(relative_error(&approx, &exact))
}

fn relative_error(
    approx: &TruncatedSeries<ApproxComplex>,
    exact: &TruncatedSeries<Rational>,
) -> f64 {
    use num_traits::ToPrimitive;
    let mut worst = 0.0f64;
    for (x, y) in approx.coeffs().iter().zip(exact.coeffs()) {
        let y = y.to_f64().unwrap_or(f64::INFINITY);
        let diff = (x.re - y).hypot(x.im);
        let rel = if y.is_zero() { diff } else { diff / y.abs() };
        if !rel.is_finite() {
            return f64::INFINITY;
        }
        worst = worst.max(rel);
    }
    worst
}
