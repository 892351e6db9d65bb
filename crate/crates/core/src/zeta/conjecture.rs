use std::fmt;

use num_bigint::BigInt;

use super::closed_form::{AnyClosedForm, ZetaClosedForm};
use super::synth::{expansion_error, synthesize_closed_form};
use crate::category::AdjacencyMatrix;
use crate::error::Result;
use crate::exactmath::{Field, Poly, Rational, Scalar, Tier};
use crate::nerve::{series_euler_to, EulerResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl Verdict {
    fn of(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "n/a",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Shape of the closed form and whether it reproduces the series.
#[derive(Clone, Debug)]
pub struct ShapeCheck {
    /// No `δ = 0` exp-terms.
    pub in_form: bool,
    /// Largest relative coefficient error through `order`; zero in exact tiers when it matches.
    pub expansion_error: f64,
    pub order: usize,
    pub verdict: Verdict,
}

#[derive(Clone, Debug)]
pub struct ExponentSum {
    pub beta_sum: Scalar,
    pub objects: usize,
    pub verdict: Verdict,
}

#[derive(Clone, Debug)]
pub struct EigenCheck {
    pub alpha: Scalar,
    /// `charpoly(α)`, exact, or relative to the size of its terms in the approximate tier.
    pub residual: Scalar,
    pub verdict: Verdict,
}

#[derive(Clone, Debug)]
pub struct EulerCheck {
    /// `Σ β/α + Σ (−1)^j γ/δ^{j+1}`, undefined when a `δ` vanishes.
    pub lhs: Option<Scalar>,
    pub series_euler: Option<Rational>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub closed_form: AnyClosedForm,
    pub c1: ShapeCheck,
    pub c2: ExponentSum,
    pub c3: Vec<EigenCheck>,
    pub c4: EulerCheck,
    pub euler: EulerResult,
    pub tolerance: f64,
}

impl ConjectureReport {
    pub fn tier(&self) -> &Tier {
        self.closed_form.tier()
    }

    pub fn c3_verdict(&self) -> Verdict {
        Verdict::of(self.c3.iter().all(|c| c.verdict == Verdict::Pass))
    }

    /// Every applicable clause passes.
    pub fn all_pass(&self) -> bool {
        self.c1.verdict == Verdict::Pass
            && self.c2.verdict == Verdict::Pass
            && self.c3_verdict() == Verdict::Pass
            && self.c4.verdict != Verdict::Fail
    }
}

pub fn check_conjecture(a: &AdjacencyMatrix, order: usize) -> Result<ConjectureReport> {
    check_conjecture_with(a, order, super::DEFAULT_TOLERANCE)
}

pub fn check_conjecture_with(
    a: &AdjacencyMatrix,
    order: usize,
    tolerance: f64,
) -> Result<ConjectureReport> {
    let form = synthesize_closed_form(a)?;
    let euler = series_euler_to(a, order);
    let err = expansion_error(&form, a, order)?;
    let expansion_ok = if form.tier().is_exact() {
        err == 0.0
    } else {
        err <= tolerance
    };
    let c1 = ShapeCheck {
        in_form: !form.has_transient(),
        expansion_error: err,
        order,
        verdict: Verdict::of(expansion_ok && !form.has_transient()),
    };
    let cp = a.char_poly();
    let chi = euler.series_euler.clone();
    let (c2, c3, c4) = match &form {
        AnyClosedForm::Rational(f) => clauses(f, a.n(), &cp, chi.as_ref(), tolerance),
        AnyClosedForm::Quadratic(f) => clauses(f, a.n(), &cp, chi.as_ref(), tolerance),
        AnyClosedForm::Gaussian(f) => clauses(f, a.n(), &cp, chi.as_ref(), tolerance),
        AnyClosedForm::Approximate(f) => clauses(f, a.n(), &cp, chi.as_ref(), tolerance),
    };
    Ok(ConjectureReport {
        closed_form: form,
        c1,
        c2,
        c3,
        c4,
        euler,
        tolerance,
    })
}

fn close<F: Field>(x: &F, y: &F, tolerance: f64) -> bool {
    if F::is_exact() {
        x.same_as(y)
    } else {
        (x.clone() - y.clone()).magnitude() <= tolerance
    }
}

fn clauses<F: Field>(
    f: &ZetaClosedForm<F>,
    n: usize,
    cp: &Poly,
    chi: Option<&Rational>,
    tolerance: f64,
) -> (ExponentSum, Vec<EigenCheck>, EulerCheck) {
    let sum = f.beta_sum();
    let c2 = ExponentSum {
        verdict: Verdict::of(close(&sum, &F::from_bigint(&BigInt::from(n)), tolerance)),
        beta_sum: sum.to_scalar(),
        objects: n,
    };

    let c3 = f
        .factors()
        .iter()
        .map(|x| {
            let (value, scale) = eval_with_scale(cp, &x.alpha);
            let (residual, ok) = if F::is_exact() {
                (value.clone(), value.is_zero())
            } else {
                let rel = value.magnitude() / scale.max(f64::MIN_POSITIVE);
                (
                    F::from_rational(&Rational::from_float(rel).unwrap_or_default()),
                    rel <= tolerance,
                )
            };
            EigenCheck {
                alpha: x.alpha.to_scalar(),
                residual: residual.to_scalar(),
                verdict: Verdict::of(ok),
            }
        })
        .collect();

    let lhs = f.euler_sum();
    let verdict = match (chi, &lhs) {
        (None, _) => Verdict::NotApplicable,
        (Some(_), None) => Verdict::Fail,
        (Some(c), Some(l)) => Verdict::of(close(l, &F::from_rational(c), tolerance)),
    };
    let c4 = EulerCheck {
        lhs: lhs.map(|l| l.to_scalar()),
        series_euler: chi.cloned(),
        verdict,
    };
    (c2, c3, c4)
}

/// `p(x)` by Horner, with `Σ |c_k|·|x|^k` for a relative scale.
fn eval_with_scale<F: Field>(p: &Poly, x: &F) -> (F, f64) {
    let mag = x.magnitude();
    let mut acc = F::zero();
    let mut scale = 0.0;
    for c in p.coeffs().iter().rev() {
        acc = acc * x.clone() + F::from_rational(c);
        scale = scale * mag + c.clone().magnitude();
    }
    (acc, scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{gaussian, int, rat, QuadraticElem};

    fn m(rows: &[&[i64]]) -> AdjacencyMatrix {
        AdjacencyMatrix::validate(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn complex_one_passes() {
        let r = check_conjecture(&m(&[&[2, 3, 2], &[1, 2, 6], &[1, 1, 2]]), 20).unwrap();
        assert_eq!(r.tier(), &Tier::Gaussian);
        assert!(r.c2.beta_sum.same_value(&Scalar::Rational(int(3))));
        assert!(r
            .c4
            .lhs
            .as_ref()
            .unwrap()
            .same_value(&Scalar::Rational(rat(5, 6))));
        assert_eq!(r.c4.verdict, Verdict::Pass);
        let betas: Vec<_> = r
            .closed_form
            .to_scalars()
            .factors
            .into_iter()
            .map(|(_, b)| b)
            .collect();
        assert!(betas[0].same_value(&Scalar::Rational(rat(125, 37))));
        assert!(betas[1].same_value(&Scalar::Complex(gaussian(rat(-7, 37), rat(-5, 37)))));
        assert!(betas[2].same_value(&Scalar::Complex(gaussian(rat(-7, 37), rat(5, 37)))));
        assert!(r.all_pass());
    }

    #[test]
    fn example_one_fails_exponent_sum() {
        let r = check_conjecture(&m(&[&[2, 3, 5], &[2, 3, 5], &[2, 1, 3]]), 20).unwrap();
        assert_eq!(r.c2.verdict, Verdict::Fail);
        assert!(r.c2.beta_sum.same_value(&Scalar::Rational(rat(13, 4))));
        assert_eq!(r.c4.verdict, Verdict::NotApplicable);
        assert_eq!(r.c1.verdict, Verdict::Pass);
        assert_eq!(r.c3_verdict(), Verdict::Pass);
        assert!(!r.all_pass());
    }

    #[test]
    fn complex_two_passes() {
        let r = check_conjecture(&m(&[&[4, 7, 8], &[1, 4, 5], &[1, 1, 3]]), 20).unwrap();
        assert!(r
            .c4
            .lhs
            .as_ref()
            .unwrap()
            .same_value(&Scalar::Rational(int(0))));
        assert!(r.all_pass());
    }

    #[test]
    fn fibonacci_passes() {
        let r = check_conjecture(&m(&[&[1, 1], &[1, 2]]), 20).unwrap();
        assert!(r
            .c2
            .beta_sum
            .same_value(&Scalar::Quadratic(QuadraticElem::from_rational(&int(2)))));
        assert!(r
            .c4
            .lhs
            .as_ref()
            .unwrap()
            .same_value(&Scalar::Rational(int(1))));
        assert!(r.all_pass());
    }

    #[test]
    fn transient_fails_shape_and_euler_sum() {
        let r = check_conjecture(&m(&[&[1, 0, 1], &[1, 1, 0], &[3, 2, 1]]), 20).unwrap();
        assert!(!r.c1.in_form);
        assert_eq!(r.c1.verdict, Verdict::Fail);
        assert_eq!(r.c1.expansion_error, 0.0);
        if r.c4.series_euler.is_some() {
            assert_eq!(r.c4.verdict, Verdict::Fail);
            assert!(r.c4.lhs.is_none());
        }
    }

    #[test]
    fn approximate_tier_uses_tolerance() {
        let r = check_conjecture(&m(&[&[1, 0, 1], &[0, 2, 1], &[1, 1, 1]]), 30).unwrap();
        assert_eq!(r.tier(), &Tier::Approximate);
        assert_eq!(r.c1.verdict, Verdict::Pass);
        assert_eq!(r.c3_verdict(), Verdict::Pass);
        assert_eq!(r.c2.verdict, Verdict::Pass);
    }

    #[test]
    fn groupoid_passes() {
        let r = check_conjecture(&m(&[&[3, 3], &[3, 3]]), 20).unwrap();
        assert!(r.all_pass());
        assert_eq!(r.euler.series_euler, Some(rat(1, 3)));
    }
}
