//! Exact linear algebra on small dense matrices stored as `Vec<Vec<_>>`.

use num_traits::{One, Zero};

use super::field::Rational;
use super::poly::Poly;

pub type PolyMatrix = Vec<Vec<Poly>>;
pub type RatMatrix = Vec<Vec<Rational>>;

fn assert_square<T>(m: &[Vec<T>]) -> usize {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    n
}

/// Determinant over `ℚ[t]` by fraction-free (Bareiss) elimination.
///
/// Every intermediate entry is a minor of the input, so each division is exact.
pub fn poly_det(m: &[Vec<Poly>]) -> Poly {
    let n = assert_square(m);
    if n == 0 {
        return Poly::one();
    }
    let mut a: PolyMatrix = m.to_vec();
    let mut sign = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Poly::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = Poly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        -&det
    } else {
        det
    }
}

fn minor<T: Clone>(m: &[Vec<T>], row: usize, col: usize) -> Vec<Vec<T>> {
    m.iter()
        .enumerate()
        .filter(|&(i, _)| i != row)
        .map(|(_, r)| {
            r.iter()
                .enumerate()
                .filter(|&(j, _)| j != col)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

/// Classical adjugate: `adj[j][i] = (−1)^{i+j}·det(minor(i, j))`.
pub fn poly_adjugate(m: &[Vec<Poly>]) -> PolyMatrix {
    let n = assert_square(m);
    if n == 1 {
        return vec![vec![Poly::one()]];
    }
    let mut adj = vec![vec![Poly::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let d = poly_det(&minor(m, i, j));
            adj[j][i] = if (i + j) % 2 == 0 { d } else { -&d };
        }
    }
    adj
}

/// Determinant and the sum of all adjugate entries.
pub fn poly_det_and_adjugate(m: &[Vec<Poly>]) -> (Poly, Poly) {
    let det = poly_det(m);
    let sum = poly_adjugate(m)
        .iter()
        .flatten()
        .fold(Poly::zero(), |acc, p| &acc + p);
    (det, sum)
}

pub fn poly_mat_mul(a: &[Vec<Poly>], b: &[Vec<Poly>]) -> PolyMatrix {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).fold(Poly::zero(), |acc, l| &acc + &(&a[i][l] * &b[l][j])))
                .collect()
        })
        .collect()
}

/// `E − B·t` as a polynomial matrix in `t`.
pub fn identity_minus_scaled(b: &[Vec<Rational>]) -> PolyMatrix {
    let n = assert_square(b);
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let one = if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    };
                    Poly::linear(one, -b[i][j].clone())
                })
                .collect()
        })
        .collect()
}

/// `det(λE − A)`, monic of degree `n`.
pub fn char_poly(a: &[Vec<Rational>]) -> Poly {
    let n = assert_square(a);
    let m: PolyMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let lead = if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    };
                    Poly::linear(-a[i][j].clone(), lead)
                })
                .collect()
        })
        .collect();
    poly_det(&m)
}

/// Solves `A·x = b` exactly. Returns one solution, or `None` if inconsistent.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut r = r.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&i| !aug[i][col].is_zero()) else {
            continue;
        };
        aug.swap(row, p);
        let inv = Rational::one() / aug[row][col].clone();
        for x in aug[row].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != row && !aug[i][col].is_zero() {
                let f = aug[i][col].clone();
                for j in col..=cols {
                    let v = aug[row][j].clone() * f.clone();
                    aug[i][j] = aug[i][j].clone() - v;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    if aug[row..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

/// Exact inverse, or `None` when singular.
pub fn inverse(a: &[Vec<Rational>]) -> Option<RatMatrix> {
    let n = assert_square(a);
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&i| !aug[i][col].is_zero())?;
        aug.swap(col, p);
        let inv = Rational::one() / aug[col][col].clone();
        for x in aug[col].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..n {
            if i != col && !aug[i][col].is_zero() {
                let f = aug[i][col].clone();
                for j in col..2 * n {
                    let v = aug[col][j].clone() * f.clone();
                    aug[i][j] = aug[i][j].clone() - v;
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::field::int;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn one_by_one() {
        let (det, adj) = poly_det_and_adjugate(&[vec![p(&[3, 1, 4])]]);
        assert_eq!(det, p(&[3, 1, 4]));
        assert_eq!(adj, Poly::one());
    }

    #[test]
    fn diagonal_gives_product_and_sum() {
        let (a, b) = (p(&[1, 2]), p(&[0, 0, 5]));
        let m = vec![vec![a.clone(), Poly::zero()], vec![Poly::zero(), b.clone()]];
        let (det, sum) = poly_det_and_adjugate(&m);
        assert_eq!(det, &a * &b);
        assert_eq!(sum, &a + &b);
    }

    #[test]
    fn zero_pivot_needs_swap() {
        let m = vec![vec![Poly::zero(), p(&[1])], vec![p(&[1]), Poly::zero()]];
        assert_eq!(poly_det(&m), p(&[-1]));
    }

    #[test]
    fn char_poly_complex_example() {
        let a: RatMatrix = [[2, 3, 2], [1, 2, 6], [1, 1, 2]]
            .iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect();
        assert_eq!(char_poly(&a), p(&[-6, 1, -6, 1]));
    }

    #[test]
    fn solve_consistency() {
        let a: RatMatrix = vec![vec![int(2), int(2)], vec![int(2), int(2)]];
        assert!(solve(&a, &[int(1), int(2)]).is_none());
        let x = solve(&a, &[int(1), int(1)]).unwrap();
        assert_eq!(&x[0] + &x[1], crate::exactmath::field::rat(1, 2));
        assert!(inverse(&a).is_none());
    }
}
