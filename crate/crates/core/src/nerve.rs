//! Chain counts of the nerve, their generating functions, and the two
//! Euler characteristics.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::category::AdjacencyMatrix;
use crate::exactmath::matrix::{identity_minus_scaled, inverse, solve};
use crate::exactmath::{poly_det_and_adjugate, Rational, RationalFunction, TruncatedSeries};

/// Default truncation order for series checks.
pub const DEFAULT_ORDER: usize = 40;

/// `degenerate[m] = sum(A^m)`, `nondegenerate[k] = sum((A − E)^k)`, for `0..=order`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainCounts {
    pub degenerate: Vec<BigInt>,
    pub nondegenerate: Vec<BigInt>,
    pub order: usize,
}

impl ChainCounts {
    pub fn objects(&self) -> &BigInt {
        &self.degenerate[0]
    }
}

/// `sum(B^m)` for `m = 0..=order`, by repeated `v ← B·v` on the all-ones vector.
fn power_sums(b: &[Vec<BigInt>], order: usize) -> Vec<BigInt> {
    let n = b.len();
    let mut v = vec![BigInt::one(); n];
    let mut out = Vec::with_capacity(order + 1);
    out.push(BigInt::from(n));
    for _ in 0..order {
        v = b
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&v)
                    .fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
            })
            .collect();
        out.push(v.iter().sum());
    }
    out
}

pub fn chain_counts(a: &AdjacencyMatrix, order: usize) -> ChainCounts {
    let full = a.to_bigint();
    let mut reduced = full.clone();
    for (i, row) in reduced.iter_mut().enumerate() {
        row[i] -= 1;
    }
    ChainCounts {
        degenerate: power_sums(&full, order),
        nondegenerate: power_sums(&reduced, order),
        order,
    }
}

/// `sum(adj(E − B·t)) / det(E − B·t)`, reduced.
fn resolvent_sum(b: &[Vec<Rational>]) -> RationalFunction {
    let (det, adj_sum) = poly_det_and_adjugate(&identity_minus_scaled(b));
    RationalFunction::new(adj_sum, det)
}

/// `Σ N_m z^m` in closed form.
pub fn degenerate_generating_function(a: &AdjacencyMatrix) -> RationalFunction {
    resolvent_sum(&a.to_rational())
}

/// `Σ N̄_k t^k` in closed form.
pub fn nondegenerate_generating_function(a: &AdjacencyMatrix) -> RationalFunction {
    resolvent_sum(&a.nondegenerate_part())
}

/// Whether the reduced expression is finite at `t = −1`.
#[derive(Clone, Debug, PartialEq)]
pub enum Existence {
    Exists,
    /// The reduced denominator vanishes at `−1`; `numerator` is its nonzero partner.
    Pole {
        numerator: Rational,
        denominator: Rational,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct EulerResult {
    pub series_euler: Option<Rational>,
    pub leinster_euler: Option<Rational>,
    pub rational_expression: RationalFunction,
    pub existence: Existence,
    /// Taylor coefficients of the expression equal `N̄_k` through the checked order.
    pub expansion_verified: bool,
}

pub fn series_euler(a: &AdjacencyMatrix) -> EulerResult {
    series_euler_to(a, DEFAULT_ORDER)
}

pub fn series_euler_to(a: &AdjacencyMatrix, order: usize) -> EulerResult {
    let r = nondegenerate_generating_function(a);
    let minus_one = -Rational::one();
    let (series, existence) = match r.eval(&minus_one) {
        Some(v) => (Some(v), Existence::Exists),
        None => (
            None,
            Existence::Pole {
                numerator: r.numerator().eval(&minus_one),
                denominator: r.denominator().eval(&minus_one),
            },
        ),
    };
    let counts = chain_counts(a, order);
    let expansion_verified = match r.taylor(order) {
        Ok(s) => s
            .coeffs()
            .iter()
            .zip(&counts.nondegenerate)
            .all(|(c, n)| *c == Rational::from_integer(n.clone())),
        Err(_) => false,
    };
    EulerResult {
        series_euler: series,
        leinster_euler: leinster_euler(a),
        rational_expression: r,
        existence,
        expansion_verified,
    }
}

/// `sum(A^{-1})`, or the common total of a weighting and coweighting when `A` is singular.
pub fn leinster_euler(a: &AdjacencyMatrix) -> Option<Rational> {
    let m = a.to_rational();
    if let Some(inv) = inverse(&m) {
        return Some(inv.iter().flatten().sum());
    }
    let ones = vec![Rational::one(); a.n()];
    let w = solve(&m, &ones)?;
    let t = a.transpose().to_rational();
    let v = solve(&t, &ones)?;
    let (sw, sv): (Rational, Rational) = (w.iter().sum(), v.iter().sum());
    (sw == sv).then_some(sw)
}

/// `Σ_{m≥1} N_m z^m / m`, the logarithm of the zeta function.
pub fn log_zeta_series(counts: &ChainCounts) -> TruncatedSeries {
    let coeffs = counts
        .degenerate
        .iter()
        .enumerate()
        .map(|(m, n)| {
            if m == 0 {
                Rational::zero()
            } else {
                Rational::new(n.clone(), BigInt::from(m))
            }
        })
        .collect();
    TruncatedSeries::new(coeffs, counts.order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat, Poly};

    fn m(rows: &[&[i64]]) -> AdjacencyMatrix {
        AdjacencyMatrix::validate(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn point_counts() {
        let c = chain_counts(&m(&[&[1]]), 6);
        assert!(c.degenerate.iter().all(|x| *x == big(1)));
        assert_eq!(c.nondegenerate[0], big(1));
        assert!(c.nondegenerate[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn nine_to_the_m() {
        let c = chain_counts(&m(&[&[2, 2, 2], &[2, 2, 2], &[2, 8, 5]]), 5);
        assert_eq!(c.degenerate[2], big(243));
        for (k, x) in c.degenerate.iter().enumerate() {
            assert_eq!(*x, big(3) * big(9).pow(k as u32));
        }
    }

    #[test]
    fn connected_groupoid_counts() {
        let c = chain_counts(&m(&[&[3, 3], &[3, 3]]), 8);
        for (k, x) in c.degenerate.iter().enumerate() {
            assert_eq!(*x, big(2).pow(k as u32 + 1) * big(3).pow(k as u32));
        }
    }

    #[test]
    fn generating_functions() {
        let g = degenerate_generating_function(&m(&[&[1]]));
        assert_eq!(
            g,
            RationalFunction::new(Poly::one(), Poly::from_ints(&[1, -1]))
        );

        let a = m(&[&[1, 1], &[0, 1]]);
        let g = degenerate_generating_function(&a);
        let c = chain_counts(&a, 10);
        let s = g.taylor(10).unwrap();
        for k in 0..=10 {
            assert_eq!(*s.coeff(k), Rational::from_integer(c.degenerate[k].clone()));
            assert_eq!(c.degenerate[k], big(k as i64 + 2));
        }

        let g = degenerate_generating_function(&m(&[&[2, 3, 5], &[2, 3, 5], &[2, 1, 3]]));
        assert_eq!(g.denominator(), &Poly::from_ints(&[1, -8]));
        let s = g.taylor(6).unwrap();
        assert_eq!(*s.coeff(0), int(3));
        for k in 1..=6 {
            assert_eq!(*s.coeff(k), rat(13, 4) * int(8).pow(k as i32));
        }
    }

    #[test]
    fn series_euler_examples() {
        let r = series_euler(&m(&[&[2, 2, 2], &[2, 2, 2], &[2, 8, 5]]));
        assert_eq!(r.series_euler, Some(rat(1, 3)));
        assert_eq!(r.leinster_euler, Some(rat(1, 2)));
        assert!(r.expansion_verified);

        let r = series_euler(&m(&[&[2, 3, 5], &[2, 3, 5], &[2, 1, 3]]));
        assert_eq!(r.series_euler, None);
        assert_eq!(r.leinster_euler, None);
        match r.existence {
            Existence::Pole {
                numerator,
                denominator,
            } => {
                assert!(denominator.is_zero());
                assert!(!numerator.is_zero());
            }
            Existence::Exists => panic!("expected a pole"),
        }

        assert_eq!(
            series_euler(&m(&[&[1, 1], &[1, 1]])).series_euler,
            Some(int(1))
        );
    }

    #[test]
    fn leinster_examples() {
        assert_eq!(leinster_euler(&m(&[&[1, 1], &[1, 2]])), Some(int(1)));
        assert_eq!(
            leinster_euler(&m(&[&[2, 3, 2], &[1, 2, 6], &[1, 1, 2]])),
            Some(rat(5, 6))
        );
        assert_eq!(leinster_euler(&m(&[&[1]])), Some(int(1)));
    }

    #[test]
    fn invertible_euler_characteristics_agree() {
        for a in [
            m(&[&[1, 1], &[1, 2]]),
            m(&[&[2, 3, 2], &[1, 2, 6], &[1, 1, 2]]),
            m(&[&[4, 7, 8], &[1, 4, 5], &[1, 1, 3]]),
        ] {
            let r = series_euler(&a);
            assert_eq!(r.series_euler, r.leinster_euler);
        }
    }
}
