//! Root extraction for integer polynomials.
//!
//! Roots come out in the lowest tier that holds them: rational roots exactly,
//! roots of irreducible quadratic factors as [`QuadraticElem`] or
//! [`ComplexRational`], and anything left as certified [`ApproxComplex`]
//! values. Numeric roots are only used to *propose* exact factors; every
//! exact factor is confirmed by exact polynomial division.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use super::approx::ApproxComplex;
use super::field::{Field, Rational};
use super::gaussian::{gaussian, ComplexRational};
use super::poly::Poly;
use super::quadratic::QuadraticElem;
use super::scalar::{Scalar, Tier};
use crate::error::{Error, Result};

/// Certified radius every approximate root must reach, relative to `max(1, |root|)`.
pub const ROOT_TOLERANCE: f64 = 1e-12;

/// Trial-division bound used by the integer helpers below.
const TRIAL_LIMIT: u64 = 1_000_000;

#[derive(Clone, Debug)]
pub struct RootFactorization {
    /// Distinct roots with multiplicities, in canonical order.
    pub roots: Vec<(Scalar, usize)>,
    /// Smallest tier that holds every root.
    pub tier: Tier,
}

impl RootFactorization {
    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|(_, m)| m).sum()
    }
}

/// Finds all roots of a nonzero rational polynomial with multiplicities.
pub fn factor_scalar_roots(p: &Poly) -> Result<RootFactorization> {
    assert!(!p.is_zero(), "roots of the zero polynomial");
    let mut roots: Vec<(Scalar, usize)> = Vec::new();
    for (part, mult) in square_free_decomposition(&p.monic()) {
        for root in simple_roots(&part)? {
            roots.push((root, mult));
        }
    }
    let tier = joint_tier(roots.iter().map(|(r, _)| r));
    sort_roots(&mut roots);
    Ok(RootFactorization { roots, tier })
}

/// Yun's algorithm: `p = Π s_k^k` with each `s_k` square-free and monic.
pub fn square_free_decomposition(p: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.exact_div(&a0).unwrap();
    let mut c = dp.exact_div(&a0).unwrap();
    let mut d = &c - &b.derivative();
    let mut k = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        b = b.exact_div(&a).unwrap();
        c = d.exact_div(&a).unwrap();
        d = &c - &b.derivative();
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.monic(), k));
        }
        k += 1;
    }
    out
}

/// Scales a rational polynomial to a primitive integer polynomial with positive leading coefficient.
pub fn primitive_integer(p: &Poly) -> Vec<BigInt> {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().is_some_and(|c| c.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    ints.into_iter().map(|c| c / &content * &sign).collect()
}

/// Roots of a square-free polynomial.
fn simple_roots(p: &Poly) -> Result<Vec<Scalar>> {
    let mut rest = p.monic();
    let mut out = Vec::new();

    if rest.degree() >= Some(1) && rest.coeff(0).is_zero() {
        out.push(Scalar::Rational(Rational::zero()));
        rest = rest.exact_div(&Poly::x()).unwrap();
    }

    // rational roots
    if rest.degree() >= Some(1) {
        let lc = primitive_integer(&rest).last().cloned().unwrap();
        let denoms = small_divisors(&lc);
        for z in numeric_roots(&rest)? {
            if z.im.abs() > 1e-6 * z.norm().max(1.0) {
                continue;
            }
            for q in &denoms {
                let qf = q.to_f64().unwrap();
                let Some(num) = BigInt::from_f64((z.re * qf).round()) else {
                    continue;
                };
                let cand = Rational::new(num, q.clone());
                if rest.eval(&cand).is_zero() {
                    rest = rest
                        .exact_div(&Poly::linear(-cand.clone(), Rational::one()))
                        .unwrap();
                    out.push(Scalar::Rational(cand));
                    break;
                }
            }
        }
    }

    // quadratic factors
    let mut quadratics: Vec<Vec<BigInt>> = Vec::new();
    loop {
        match rest.degree() {
            Some(2) => {
                quadratics.push(primitive_integer(&rest));
                rest = Poly::one();
            }
            Some(d) if d >= 4 => {
                if let Some(q) = find_quadratic_factor(&rest)? {
                    let qp = Poly::new(
                        q.iter()
                            .map(|c| Rational::from_integer(c.clone()))
                            .collect(),
                    );
                    rest = rest.exact_div(&qp).unwrap().monic();
                    quadratics.push(q);
                    continue;
                }
            }
            _ => {}
        }
        break;
    }
    for q in &quadratics {
        let (r1, r2) = quadratic_roots(q);
        out.push(r1);
        out.push(r2);
    }

    // whatever is left has no rational or quadratic factor
    if rest.degree() >= Some(1) {
        for r in certified_roots(&rest)? {
            out.push(Scalar::Approx(r));
        }
    }
    Ok(out)
}

fn find_quadratic_factor(p: &Poly) -> Result<Option<Vec<BigInt>>> {
    let lc = primitive_integer(p).last().cloned().unwrap();
    let leads = small_divisors(&lc);
    let zs = numeric_roots(p)?;
    for i in 0..zs.len() {
        for j in i + 1..zs.len() {
            let s = zs[i] + zs[j];
            let m = zs[i] * zs[j];
            let tol = 1e-6 * (1.0 + s.norm() + m.norm());
            if s.im.abs() > tol || m.im.abs() > tol {
                continue;
            }
            for q2 in &leads {
                let qf = q2.to_f64().unwrap();
                let (Some(c1), Some(c0)) = (
                    BigInt::from_f64((-s.re * qf).round()),
                    BigInt::from_f64((m.re * qf).round()),
                ) else {
                    continue;
                };
                let cand = Poly::new(vec![
                    Rational::from_integer(c0.clone()),
                    Rational::from_integer(c1.clone()),
                    Rational::from_integer(q2.clone()),
                ]);
                if p.exact_div(&cand).is_some() {
                    return Ok(Some(vec![c0, c1, q2.clone()]));
                }
            }
        }
    }
    Ok(None)
}

/// Exact roots of `c2·x² + c1·x + c0` with no rational root.
fn quadratic_roots(q: &[BigInt]) -> (Scalar, Scalar) {
    let (c0, c1, c2) = (&q[0], &q[1], &q[2]);
    let disc = c1 * c1 - BigInt::from(4) * c2 * c0;
    let (f, d) = square_free_split(&disc);
    let two_a = Rational::from_integer(BigInt::from(2) * c2);
    let base = Rational::from_integer(-c1.clone()) / two_a.clone();
    let coeff = Rational::from_integer(f) / two_a;
    if d == -BigInt::one() {
        (
            Scalar::Complex(gaussian(base.clone(), coeff.clone())),
            Scalar::Complex(gaussian(base, -coeff)),
        )
    } else {
        (
            Scalar::Quadratic(QuadraticElem::new(base.clone(), coeff.clone(), d.clone())),
            Scalar::Quadratic(QuadraticElem::new(base, -coeff, d)),
        )
    }
}

/// Smallest tier holding all the given values. Distinct quadratic fields force
/// the approximate tier.
pub fn joint_tier<'a>(values: impl IntoIterator<Item = &'a Scalar>) -> Tier {
    let mut tier = Tier::Rational;
    for v in values {
        tier = match (tier, v.tier()) {
            (Tier::Approximate, _) | (_, Tier::Approximate) => Tier::Approximate,
            (t, Tier::Rational) => t,
            (Tier::Rational, t) => t,
            (a, b) if a == b => a,
            _ => Tier::Approximate,
        };
    }
    tier
}

fn sort_roots(roots: &mut [(Scalar, usize)]) {
    roots.sort_by(|(a, _), (b, _)| {
        let (ar, ai) = a.to_complex_f64();
        let (br, bi) = b.to_complex_f64();
        br.total_cmp(&ar).then(ai.total_cmp(&bi))
    });
}

/// Numeric roots of a square-free polynomial by the Aberth–Ehrlich iteration.
fn numeric_roots(p: &Poly) -> Result<Vec<Complex64>> {
    let coeffs: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::NAN))
        .collect();
    let n = coeffs.len() - 1;
    if n == 0 {
        return Ok(Vec::new());
    }
    let lead = coeffs[n];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    if n == 1 {
        return Ok(vec![Complex64::new(-monic[0], 0.0)]);
    }
    let radius = 1.0 + monic[..n].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius * 0.7, theta)
        })
        .collect();
    let eval = |x: Complex64| -> (Complex64, Complex64) {
        let mut v = Complex64::new(0.0, 0.0);
        let mut d = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            d = d * x + v;
            v = v * x + c;
        }
        (v, d)
    };
    let mut converged = false;
    for _ in 0..1000 {
        let mut max_step = 0.0f64;
        for k in 0..n {
            let (v, d) = eval(z[k]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / d;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if w.is_finite() {
                z[k] -= w;
                max_step = max_step.max(w.norm() / z[k].norm().max(1.0));
            }
        }
        if max_step < 1e-15 {
            converged = true;
            break;
        }
    }
    // a few Newton steps tidy up the last bits
    for zk in z.iter_mut() {
        for _ in 0..3 {
            let (v, d) = eval(*zk);
            let step = v / d;
            if step.is_finite() {
                *zk -= step;
            }
        }
    }
    if !converged && z.iter().any(|x| !x.is_finite()) {
        return Err(Error::NumericFailure("root iteration diverged".into()));
    }
    Ok(z)
}

fn exact_gaussian(z: Complex64) -> Option<ComplexRational> {
    Some(gaussian(
        BigRational::from_float(z.re)?,
        BigRational::from_float(z.im)?,
    ))
}

fn gaussian_norm(z: &ComplexRational) -> f64 {
    let re = z.re.to_f64().unwrap_or(f64::INFINITY);
    let im = z.im.to_f64().unwrap_or(f64::INFINITY);
    re.hypot(im)
}

/// Roots of a square-free polynomial with certified error radii.
///
/// Each radius is `deg·|p(r)|/|p'(r)|` with `p(r)` and `p'(r)` evaluated
/// exactly at the floating point approximation `r`; a disk of that radius
/// around `r` always contains a root. Pairwise disjoint disks then contain
/// distinct roots.
pub fn certified_roots(p: &Poly) -> Result<Vec<ApproxComplex>> {
    let n = p.degree().unwrap_or(0);
    let approx = numeric_roots(p)?;
    let pc: Poly<ComplexRational> = p.map(ComplexRational::from_rational);
    let dpc = pc.derivative();
    let mut out = Vec::with_capacity(n);
    for z in approx {
        let exact = exact_gaussian(z)
            .ok_or_else(|| Error::NumericFailure("non-finite root estimate".into()))?;
        let v = gaussian_norm(&pc.eval(&exact));
        let d = gaussian_norm(&dpc.eval(&exact));
        if d == 0.0 || !d.is_finite() {
            return Err(Error::NumericFailure(
                "vanishing derivative at a root".into(),
            ));
        }
        let radius = (n as f64) * v / d * (1.0 + 1e-12) + f64::MIN_POSITIVE;
        if radius > ROOT_TOLERANCE * z.norm().max(1.0) {
            return Err(Error::NumericFailure(format!(
                "root {z} only certified to {radius:e}"
            )));
        }
        let im = if z.im.abs() <= radius { 0.0 } else { z.im };
        out.push(ApproxComplex::new(z.re, im, radius + (z.im - im).abs()));
    }
    for i in 0..out.len() {
        for j in i + 1..out.len() {
            if out[i].overlaps(&out[j], 0.0) {
                return Err(Error::NumericFailure("root inclusion disks overlap".into()));
            }
        }
    }
    Ok(out)
}

/// Positive divisors of `|n|`; only `[1]` when `|n|` is too large to factor by trial division.
fn small_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    match n.to_u64() {
        Some(v) if v <= TRIAL_LIMIT * TRIAL_LIMIT => {
            let mut small = Vec::new();
            let mut large = Vec::new();
            let mut d = 1u64;
            while d * d <= v {
                if v % d == 0 {
                    small.push(BigInt::from(d));
                    if d * d != v {
                        large.push(BigInt::from(v / d));
                    }
                }
                d += 1;
            }
            small.extend(large.into_iter().rev());
            small
        }
        _ => vec![BigInt::one()],
    }
}

/// Writes `n = f²·d` with `d` square-free (sign kept in `d`).
pub fn square_free_split(n: &BigInt) -> (BigInt, BigInt) {
    assert!(!n.is_zero());
    let mut rest = n.abs();
    let mut f = BigInt::one();
    let mut d = if n.is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    let mut p = BigInt::from(2);
    let limit = BigInt::from(TRIAL_LIMIT);
    while &p * &p <= rest && p <= limit {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            f *= p.pow(e / 2);
            if e % 2 == 1 {
                d *= &p;
            }
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if rest > BigInt::one() {
        let r = rest.sqrt();
        if &r * &r == rest {
            f *= r;
        } else {
            d *= rest;
        }
    }
    (f, d)
}

pub fn is_square_free(n: &BigInt) -> bool {
    !n.is_zero() && square_free_split(n).0.is_one()
}
