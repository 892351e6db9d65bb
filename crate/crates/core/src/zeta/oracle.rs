//! Independent closed forms for the classes where the zeta function is known
//! by hand: groupoids, acyclic categories, two objects, constant sums.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::closed_form::{AnyClosedForm, ExpTerm, Factor, ZetaClosedForm};
use crate::category::{is_acyclic_category, AdjacencyMatrix, GroupoidSpec};
use crate::error::{Error, Result};
use crate::exactmath::roots::square_free_split;
use crate::exactmath::{QuadraticElem, Rational, Tier};
use crate::nerve::chain_counts;

fn q(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn rational_form(
    factors: Vec<(Rational, Rational)>,
    terms: Vec<(Rational, Rational, usize)>,
) -> ZetaClosedForm<Rational> {
    ZetaClosedForm::new(
        factors
            .into_iter()
            .map(|(alpha, beta)| Factor { alpha, beta })
            .collect(),
        terms
            .into_iter()
            .map(|(gamma, delta, j)| ExpTerm { gamma, delta, j })
            .collect(),
        Tier::Rational,
    )
}

/// `Π (1 − n_i o_i z)^{−n_i}`.
pub fn oracle_groupoid(g: &GroupoidSpec) -> ZetaClosedForm<Rational> {
    rational_form(
        g.components()
            .iter()
            .map(|&(n, o)| (q(n * o), q(n)))
            .collect(),
        Vec::new(),
    )
}

/// `(1 − z)^{−n} · exp(Σ_k N̄_k z^k / (k (1 − z)^k))`.
pub fn oracle_acyclic(a: &AdjacencyMatrix) -> Result<ZetaClosedForm<Rational>> {
    if !is_acyclic_category(a) {
        return Err(Error::NotAcyclic);
    }
    let n = a.n();
    let counts = chain_counts(a, n);
    let terms = counts.nondegenerate[1..]
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (Rational::from_integer(c.clone()), Rational::one(), k + 1))
        .collect();
    Ok(rational_form(vec![(Rational::one(), q(n as u64))], terms))
}

/// Case analysis for `[[a, b], [c, d]]`.
pub fn oracle_two_object(m: &AdjacencyMatrix) -> Result<AnyClosedForm> {
    if m.n() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            got: m.n(),
        });
    }
    if m.get(0, 1) == 0 && m.get(1, 0) != 0 {
        return oracle_two_object(&m.transpose());
    }
    let int = |i, j| Rational::from_integer(BigInt::from(m.get(i, j)));
    let (a, b, c, d) = (int(0, 0), int(0, 1), int(1, 0), int(1, 1));
    let one = Rational::one;

    if b.is_zero() && c.is_zero() {
        return Ok(rational_form(vec![(a, one()), (d, one())], Vec::new()).into());
    }
    if c.is_zero() {
        if a != d {
            let r = b / (d.clone() - a.clone());
            return Ok(
                rational_form(vec![(a, one() - r.clone()), (d, one() + r)], Vec::new()).into(),
            );
        }
        return Ok(rational_form(vec![(a.clone(), q(2))], vec![(b, a, 1)]).into());
    }
    let det = a.clone() * d.clone() - b.clone() * c.clone();
    let trace = a.clone() + d.clone();
    if det.is_zero() {
        let beta = (trace.clone() + b + c) / trace.clone();
        return Ok(rational_form(vec![(trace, beta)], Vec::new()).into());
    }
    // B± = (trace ± √Δ)/2, exponents 1 ± (b + c)/√Δ
    let disc = (d - a).pow(2) + q(4) * b.clone() * c.clone();
    let disc = disc.to_integer();
    let (f, rad) = square_free_split(&disc);
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let f = Rational::from_integer(f);
    if rad.is_one() {
        let root = f;
        let plus = (trace.clone() + root.clone()) * half.clone();
        let minus = (trace - root.clone()) * half;
        let e = (b + c) / root;
        return Ok(rational_form(
            vec![(plus, one() + e.clone()), (minus, one() - e)],
            Vec::new(),
        )
        .into());
    }
    debug_assert!(rad.is_positive());
    // √Δ = f·√rad, so (b + c)/√Δ = (b + c)/(f·rad)·√rad
    let base = trace * half.clone();
    let coeff = f.clone() * half;
    let e = (b + c) / (f * Rational::from_integer(rad.clone()));
    let qe = |x: Rational, y: Rational| QuadraticElem::new(x, y, rad.clone());
    let factors = vec![
        Factor {
            alpha: qe(base.clone(), coeff.clone()),
            beta: qe(one(), e.clone()),
        },
        Factor {
            alpha: qe(base, -coeff),
            beta: qe(one(), -e),
        },
    ];
    Ok(AnyClosedForm::Quadratic(ZetaClosedForm::new(
        factors,
        Vec::new(),
        Tier::Quadratic(rad),
    )))
}

/// `(1 − s z)^{−n}` when every column sum or every row sum equals `s`.
pub fn oracle_constant_sum(a: &AdjacencyMatrix) -> Option<ZetaClosedForm<Rational>> {
    let constant = |v: Vec<u64>| v.windows(2).all(|w| w[0] == w[1]).then(|| v[0]);
    let s = constant(a.column_sums()).or_else(|| constant(a.row_sums()))?;
    Some(rational_form(vec![(q(s), q(a.n() as u64))], Vec::new()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{free_category, groupoid_adjacency, Digraph};
    use crate::exactmath::int;
    use crate::zeta::synthesize_closed_form;

    fn m(rows: &[&[i64]]) -> AdjacencyMatrix {
        AdjacencyMatrix::validate(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn pairs(f: &ZetaClosedForm<Rational>) -> Vec<(Rational, Rational)> {
        f.factors()
            .iter()
            .map(|x| (x.alpha.clone(), x.beta.clone()))
            .collect()
    }

    fn terms(f: &ZetaClosedForm<Rational>) -> Vec<(Rational, Rational, usize)> {
        f.exp_terms()
            .iter()
            .map(|t| (t.gamma.clone(), t.delta.clone(), t.j))
            .collect()
    }

    #[test]
    fn groupoid_examples() {
        let g = |c: Vec<(u64, u64)>| oracle_groupoid(&GroupoidSpec::new(c).unwrap());
        assert_eq!(pairs(&g(vec![(1, 1)])), vec![(int(1), int(1))]);
        assert_eq!(pairs(&g(vec![(2, 3)])), vec![(int(6), int(2))]);
        assert_eq!(pairs(&g(vec![(1, 2), (2, 1)])), vec![(int(2), int(3))]);
        let spec = GroupoidSpec::new(vec![(1, 2), (2, 1)]).unwrap();
        let synth = synthesize_closed_form(&groupoid_adjacency(&spec)).unwrap();
        assert!(synth.same_as(&oracle_groupoid(&spec).into()));
    }

    #[test]
    fn acyclic_examples() {
        let f = oracle_acyclic(&m(&[&[1, 1], &[0, 1]])).unwrap();
        assert_eq!(pairs(&f), vec![(int(1), int(2))]);
        assert_eq!(terms(&f), vec![(int(1), int(1), 1)]);

        let f = oracle_acyclic(&m(&[&[1]])).unwrap();
        assert_eq!(pairs(&f), vec![(int(1), int(1))]);
        assert!(terms(&f).is_empty());

        let d = Digraph::from_arc_list(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)], false).unwrap();
        let fc = free_category(&d).unwrap();
        let f = oracle_acyclic(&fc).unwrap();
        // N̄_1 = 1 + 1 + 2, N̄_2 = 1 (the chain 0→1→2)
        assert_eq!(terms(&f), vec![(int(4), int(1), 1), (int(1), int(1), 2)]);
        assert!(synthesize_closed_form(&fc).unwrap().same_as(&f.into()));

        assert_eq!(
            oracle_acyclic(&m(&[&[1, 1], &[1, 1]])).unwrap_err(),
            Error::NotAcyclic
        );
    }

    #[test]
    fn two_object_examples() {
        let f = oracle_two_object(&m(&[&[2, 0], &[0, 3]])).unwrap();
        assert!(f.same_as(&rational_form(vec![(int(2), int(1)), (int(3), int(1))], vec![]).into()));

        let f = oracle_two_object(&m(&[&[1, 1], &[0, 1]])).unwrap();
        assert!(f.same_as(&rational_form(vec![(int(1), int(2))], vec![(int(1), int(1), 1)]).into()));

        let f = oracle_two_object(&m(&[&[1, 1], &[1, 1]])).unwrap();
        assert!(f.same_as(&rational_form(vec![(int(2), int(2))], vec![]).into()));

        let f = oracle_two_object(&m(&[&[1, 1], &[1, 2]])).unwrap();
        assert_eq!(f.tier(), &Tier::Quadratic(BigInt::from(5)));
        assert!(f.same_as(&synthesize_closed_form(&m(&[&[1, 1], &[1, 2]])).unwrap()));

        // transpose of case (2a)
        let f = oracle_two_object(&m(&[&[1, 0], &[2, 3]])).unwrap();
        assert!(f.same_as(&rational_form(vec![(int(3), int(2)), (int(1), int(0))], vec![]).into()));

        assert!(matches!(
            oracle_two_object(&m(&[&[1]])),
            Err(Error::WrongDimension { .. })
        ));
    }

    #[test]
    fn constant_sum_examples() {
        assert!(oracle_constant_sum(&m(&[&[2, 2, 2], &[2, 2, 2], &[2, 8, 5]])).is_none());
        assert_eq!(
            pairs(&oracle_constant_sum(&m(&[&[3, 3], &[3, 3]])).unwrap()),
            vec![(int(6), int(2))]
        );
        assert_eq!(
            pairs(&oracle_constant_sum(&m(&[&[1, 2], &[2, 1]])).unwrap()),
            vec![(int(3), int(2))]
        );
        // row sums only
        let a = m(&[&[1, 2], &[0, 3]]);
        assert_eq!(
            pairs(&oracle_constant_sum(&a).unwrap()),
            vec![(int(3), int(2))]
        );
    }
}
