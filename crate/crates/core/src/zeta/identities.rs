use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::synth::zeta_series;
use crate::category::{free_category, AdjacencyMatrix, Digraph, GroupoidSpec};
use crate::error::{Error, Result};
use crate::exactmath::matrix::identity_minus_scaled;
use crate::exactmath::{binomial, poly_det, Poly, Rational, TruncatedSeries};
use crate::nerve::{chain_counts, nondegenerate_generating_function, ChainCounts};

/// Outcome of a coefficient-wise series identity.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCheck {
    pub holds: bool,
    /// Highest coefficient compared.
    pub order: usize,
    /// First index where the sides differ, with the difference there.
    pub mismatch: Option<(usize, Rational)>,
}

impl IdentityCheck {
    fn compare(lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> Self {
        let order = lhs.order().min(rhs.order());
        let mismatch = (0..=order)
            .find(|&k| lhs.coeff(k) != rhs.coeff(k))
            .map(|k| (k, lhs.coeff(k) - rhs.coeff(k)));
        Self {
            holds: mismatch.is_none(),
            order,
            mismatch,
        }
    }
}

/// `Z_D(u)^{-1} = det(E − A_D u)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GraphZeta {
    pub inverse: Poly,
}

impl GraphZeta {
    pub fn series(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries::from_poly(&self.inverse, order)
            .inverse()
            .expect("det(E − A·u) has constant term 1")
    }
}

pub fn graph_zeta(d: &Digraph) -> GraphZeta {
    let arcs: Vec<Vec<Rational>> = d
        .arcs()
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| Rational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    GraphZeta {
        inverse: poly_det(&identity_minus_scaled(&arcs)),
    }
}

fn z_over_one_minus_z(order: usize) -> TruncatedSeries {
    let mut c = vec![Rational::one(); order + 1];
    c[0] = Rational::zero();
    TruncatedSeries::new(c, order)
}

/// `ζ_{F(D)}(z)·(1 − z)^{#V} = exp(Σ_k N̄_k z^k / (k (1 − z)^k))`.
pub fn verify_free_category_relation(d: &Digraph, order: usize) -> Result<IdentityCheck> {
    let f = free_category(d)?;
    let one_minus_z = TruncatedSeries::new(vec![Rational::one(), -Rational::one()], order);
    let mut lhs = zeta_series(&f, order);
    for _ in 0..d.v() {
        lhs = &lhs * &one_minus_z;
    }
    let w = z_over_one_minus_z(order);
    let counts = chain_counts(&f, order);
    let mut log = TruncatedSeries::zero(order);
    let mut wk = TruncatedSeries::one(order);
    for k in 1..=order {
        wk = &wk * &w;
        let c = &counts.nondegenerate[k];
        if !c.is_zero() {
            log = &log + &wk.scale(&Rational::new(c.clone(), BigInt::from(k)));
        }
    }
    let rhs = log.exp()?;
    Ok(IdentityCheck::compare(&lhs, &rhs))
}

/// `d/dz log ζ(z) = (R(z/(1 − z))/(1 − z) − #N_0)/z`, with `R(t) = Σ N̄_k t^k`
/// given by its rational expression. Compared through `order − 1`.
pub fn verify_integral_expression(a: &AdjacencyMatrix, order: usize) -> Result<IdentityCheck> {
    let lhs = zeta_series(a, order).log()?.derivative();
    let r = nondegenerate_generating_function(a).taylor(order)?;
    let w = z_over_one_minus_z(order);
    let geometric = TruncatedSeries::new(vec![Rational::one(); order + 1], order);
    let mut inner = &r.compose(&w)? * &geometric;
    let n0 = Rational::from_integer(BigInt::from(a.n()));
    let mut c = inner.coeffs().to_vec();
    c[0] -= n0;
    inner = TruncatedSeries::new(c, order);
    let rhs = inner.shift_down()?;
    Ok(IdentityCheck::compare(&lhs, &rhs))
}

/// `N_m = Σ_i C(m, i)·N̄_i` for every stored `m`.
pub fn verify_exchange(counts: &ChainCounts) -> IdentityCheck {
    let order = counts.order;
    let mismatch = (0..=order).find_map(|m| {
        let rhs: BigInt = (0..=m)
            .map(|i| binomial(m as u64, i as u64) * &counts.nondegenerate[i])
            .sum();
        let lhs = &counts.degenerate[m];
        (*lhs != rhs).then(|| (m, Rational::from_integer(lhs - rhs)))
    });
    IdentityCheck {
        holds: mismatch.is_none(),
        order,
        mismatch,
    }
}

/// For a block-diagonal matrix, `ζ` equals the product of the blocks' `ζ`.
/// `None` when the matrix is a single block.
pub fn verify_coproduct(a: &AdjacencyMatrix, order: usize) -> Option<IdentityCheck> {
    let blocks = a.diagonal_blocks();
    if blocks.len() < 2 {
        return None;
    }
    let mut product = TruncatedSeries::one(order);
    for b in &blocks {
        product = &product * &zeta_series(&a.restrict(b), order);
    }
    Some(IdentityCheck::compare(&zeta_series(a, order), &product))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoveringCheck {
    /// `n_E·o_E = n_B·o_B` and `n_B ≤ n_E`.
    pub consistent: bool,
    /// `(1 − n_B o_B z)^{n_B}` divides `(1 − n_E o_E z)^{n_E}`.
    pub divides: bool,
}

/// Whether `ζ_B^{-1}` divides `ζ_E^{-1}` for connected groupoids.
pub fn covering_divides(base: &GroupoidSpec, total: &GroupoidSpec) -> Result<CoveringCheck> {
    if !base.is_connected() || !total.is_connected() {
        return Err(Error::NotConnected);
    }
    let (nb, ob) = base.components()[0];
    let (ne, oe) = total.components()[0];
    let inverse_zeta = |n: u64, o: u64| {
        let s = n.checked_mul(o).ok_or(Error::Overflow)?;
        let lin = Poly::new(vec![
            Rational::one(),
            -Rational::from_integer(BigInt::from(s)),
        ]);
        Ok::<_, Error>(lin.pow(n as usize))
    };
    let divides = inverse_zeta(ne, oe)?
        .exact_div(&inverse_zeta(nb, ob)?)
        .is_some();
    let consistent = ne.checked_mul(oe) == nb.checked_mul(ob) && nb <= ne;
    debug_assert!(!consistent || divides);
    Ok(CoveringCheck {
        consistent,
        divides,
    })
}
