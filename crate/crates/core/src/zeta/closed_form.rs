use std::fmt;

use num_traits::Zero;

use crate::error::Result;
use crate::exactmath::{
    ApproxComplex, ComplexRational, Field, QuadraticElem, Rational, Scalar, Tier, TruncatedSeries,
};

/// `(1 − α·z)^{−β}`.
#[derive(Clone, Debug)]
pub struct Factor<F> {
    pub alpha: F,
    pub beta: F,
}

/// `exp(γ·z^j / (j·(1 − δ·z)^j))`.
#[derive(Clone, Debug)]
pub struct ExpTerm<F> {
    pub gamma: F,
    pub delta: F,
    pub j: usize,
}

/// `Π (1 − α_i z)^{−β_i} · exp(Σ γ_j z^j / (j (1 − δ_j z)^j))`, kept canonical.
#[derive(Clone, Debug)]
pub struct ZetaClosedForm<F: Field> {
    factors: Vec<Factor<F>>,
    exp_terms: Vec<ExpTerm<F>>,
    tier: Tier,
}

impl<F: Field> ZetaClosedForm<F> {
    pub fn new(factors: Vec<Factor<F>>, exp_terms: Vec<ExpTerm<F>>, tier: Tier) -> Self {
        let mut form = Self {
            factors,
            exp_terms,
            tier,
        };
        form.canonicalize();
        form
    }

    pub fn factors(&self) -> &[Factor<F>] {
        &self.factors
    }

    pub fn exp_terms(&self) -> &[ExpTerm<F>] {
        &self.exp_terms
    }

    pub fn tier(&self) -> &Tier {
        &self.tier
    }

    /// Merges equal bases, drops zero exponents and sorts.
    fn canonicalize(&mut self) {
        let mut factors: Vec<Factor<F>> = Vec::new();
        for f in self.factors.drain(..) {
            match factors.iter_mut().find(|g| g.alpha.same_as(&f.alpha)) {
                Some(g) => g.beta = g.beta.clone() + f.beta,
                None => factors.push(f),
            }
        }
        factors.retain(|f| !f.beta.is_zero());
        factors.sort_by(|a, b| a.alpha.canonical_cmp(&b.alpha));
        self.factors = factors;

        let mut terms: Vec<ExpTerm<F>> = Vec::new();
        for t in self.exp_terms.drain(..) {
            match terms
                .iter_mut()
                .find(|u| u.j == t.j && u.delta.same_as(&t.delta))
            {
                Some(u) => u.gamma = u.gamma.clone() + t.gamma,
                None => terms.push(t),
            }
        }
        terms.retain(|t| !t.gamma.is_zero());
        terms.sort_by(|a, b| a.delta.canonical_cmp(&b.delta).then(a.j.cmp(&b.j)));
        self.exp_terms = terms;
    }

    /// Terms with `δ = 0` come from a nilpotent transient and sit outside the conjectured shape.
    pub fn has_transient(&self) -> bool {
        self.exp_terms.iter().any(|t| t.delta.is_zero())
    }

    pub fn beta_sum(&self) -> F {
        self.factors
            .iter()
            .fold(F::zero(), |acc, f| acc + f.beta.clone())
    }

    /// `Σ β/α + Σ (−1)^j γ/δ^{j+1}`; `None` if some `δ` is zero.
    pub fn euler_sum(&self) -> Option<F> {
        let mut acc = F::zero();
        for f in &self.factors {
            acc = acc + f.beta.clone() / f.alpha.clone();
        }
        for t in &self.exp_terms {
            if t.delta.is_zero() {
                return None;
            }
            let term = t.gamma.clone() / t.delta.pow(t.j + 1);
            acc = if t.j % 2 == 0 { acc + term } else { acc - term };
        }
        Some(acc)
    }

    /// Logarithm of the closed form as a series.
    pub fn log_series(&self, order: usize) -> TruncatedSeries<F> {
        let mut acc = TruncatedSeries::zero(order);
        for f in &self.factors {
            acc = &acc + &TruncatedSeries::neg_log_one_minus(&f.alpha, order).scale(&f.beta);
        }
        for t in &self.exp_terms {
            // [z^m] z^j/(1 − δz)^j = C(m−1, j−1)·δ^{m−j}
            let mut coeffs = vec![F::zero(); order + 1];
            let mut binom = F::one();
            let mut dpow = F::one();
            for m in t.j..=order {
                if m > t.j {
                    binom = binom * F::from_int((m - 1) as i64) / F::from_int((m - t.j) as i64);
                    dpow = dpow * t.delta.clone();
                }
                coeffs[m] = binom.clone() * dpow.clone();
            }
            let scale = t.gamma.clone() / F::from_int(t.j as i64);
            acc = &acc + &TruncatedSeries::new(coeffs, order).scale(&scale);
        }
        acc
    }

    pub fn expand(&self, order: usize) -> Result<TruncatedSeries<F>> {
        self.log_series(order).exp()
    }

    pub fn to_scalars(&self) -> ScalarForm {
        ScalarForm {
            factors: self
                .factors
                .iter()
                .map(|f| (f.alpha.to_scalar(), f.beta.to_scalar()))
                .collect(),
            exp_terms: self
                .exp_terms
                .iter()
                .map(|t| (t.gamma.to_scalar(), t.delta.to_scalar(), t.j))
                .collect(),
            tier: self.tier.clone(),
        }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G, tier: Tier) -> ZetaClosedForm<G> {
        ZetaClosedForm::new(
            self.factors
                .iter()
                .map(|x| Factor {
                    alpha: f(&x.alpha),
                    beta: f(&x.beta),
                })
                .collect(),
            self.exp_terms
                .iter()
                .map(|t| ExpTerm {
                    gamma: f(&t.gamma),
                    delta: f(&t.delta),
                    j: t.j,
                })
                .collect(),
            tier,
        )
    }
}

/// Tier-erased view used for comparison and reporting.
#[derive(Clone, Debug)]
pub struct ScalarForm {
    pub factors: Vec<(Scalar, Scalar)>,
    pub exp_terms: Vec<(Scalar, Scalar, usize)>,
    pub tier: Tier,
}

impl ScalarForm {
    /// Value equality, term by term, ignoring which tier each side was computed in.
    pub fn same_as(&self, other: &ScalarForm) -> bool {
        self.factors.len() == other.factors.len()
            && self.exp_terms.len() == other.exp_terms.len()
            && self
                .factors
                .iter()
                .zip(&other.factors)
                .all(|(a, b)| a.0.same_value(&b.0) && a.1.same_value(&b.1))
            && self
                .exp_terms
                .iter()
                .zip(&other.exp_terms)
                .all(|(a, b)| a.2 == b.2 && a.0.same_value(&b.0) && a.1.same_value(&b.1))
    }
}

/// A closed form in whichever tier its scalars need.
#[derive(Clone, Debug)]
pub enum AnyClosedForm {
    Rational(ZetaClosedForm<Rational>),
    Quadratic(ZetaClosedForm<QuadraticElem>),
    Gaussian(ZetaClosedForm<ComplexRational>),
    Approximate(ZetaClosedForm<ApproxComplex>),
}

macro_rules! each_tier {
    ($self:expr, $f:ident => $body:expr) => {
        match $self {
            AnyClosedForm::Rational($f) => $body,
            AnyClosedForm::Quadratic($f) => $body,
            AnyClosedForm::Gaussian($f) => $body,
            AnyClosedForm::Approximate($f) => $body,
        }
    };
}

impl AnyClosedForm {
    pub fn tier(&self) -> &Tier {
        each_tier!(self, f => f.tier())
    }

    pub fn to_scalars(&self) -> ScalarForm {
        each_tier!(self, f => f.to_scalars())
    }

    pub fn has_transient(&self) -> bool {
        each_tier!(self, f => f.has_transient())
    }

    pub fn same_as(&self, other: &AnyClosedForm) -> bool {
        self.to_scalars().same_as(&other.to_scalars())
    }

    /// Exact Taylor coefficients, or `None` in the approximate tier.
    pub fn expand_rational(&self, order: usize) -> Option<TruncatedSeries> {
        match self {
            AnyClosedForm::Rational(f) => f.expand(order).ok(),
            AnyClosedForm::Quadratic(f) => {
                let s = f.expand(order).ok()?;
                let c: Option<Vec<Rational>> = s
                    .coeffs()
                    .iter()
                    .map(|q| q.is_rational().then(|| q.base().clone()))
                    .collect();
                Some(TruncatedSeries::new(c?, order))
            }
            AnyClosedForm::Gaussian(f) => {
                let s = f.expand(order).ok()?;
                let c: Option<Vec<Rational>> = s
                    .coeffs()
                    .iter()
                    .map(|q| q.im.is_zero().then(|| q.re.clone()))
                    .collect();
                Some(TruncatedSeries::new(c?, order))
            }
            AnyClosedForm::Approximate(_) => None,
        }
    }

    /// Coefficients as certified complex floats, in every tier.
    pub fn expand_approx(&self, order: usize) -> Result<TruncatedSeries<ApproxComplex>> {
        let embed =
            |s: Scalar| ApproxComplex::embed(&s).expect("every scalar embeds approximately");
        match self {
            AnyClosedForm::Approximate(f) => f.expand(order),
            other => {
                let sf = other.to_scalars();
                let form = ZetaClosedForm::new(
                    sf.factors
                        .into_iter()
                        .map(|(a, b)| Factor {
                            alpha: embed(a),
                            beta: embed(b),
                        })
                        .collect(),
                    sf.exp_terms
                        .into_iter()
                        .map(|(g, d, j)| ExpTerm {
                            gamma: embed(g),
                            delta: embed(d),
                            j,
                        })
                        .collect(),
                    Tier::Approximate,
                );
                form.expand(order)
            }
        }
    }
}

impl From<ZetaClosedForm<Rational>> for AnyClosedForm {
    fn from(f: ZetaClosedForm<Rational>) -> Self {
        AnyClosedForm::Rational(f)
    }
}

fn is_plain(s: &str) -> bool {
    !s.contains(' ') && !s.starts_with('-')
}

fn wrap_exponent(s: String) -> String {
    if s.chars().all(|c| c.is_ascii_digit()) {
        s
    } else {
        format!("({s})")
    }
}

fn wrap(s: String) -> String {
    if is_plain(&s) {
        s
    } else {
        format!("({s})")
    }
}

impl<F: Field> fmt::Display for ZetaClosedForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .map(|x| {
                format!(
                    "(1 - {}*z)^-{}",
                    wrap(x.alpha.to_scalar().to_string()),
                    wrap_exponent(x.beta.to_scalar().to_string())
                )
            })
            .collect();
        if !self.exp_terms.is_empty() {
            let inner: Vec<String> = self
                .exp_terms
                .iter()
                .map(|t| {
                    let zj = if t.j == 1 {
                        "z".to_string()
                    } else {
                        format!("z^{}", t.j)
                    };
                    let den = if t.delta.is_zero() {
                        t.j.to_string()
                    } else if t.j == 1 {
                        format!("(1 - {}*z)", wrap(t.delta.to_scalar().to_string()))
                    } else {
                        format!(
                            "({}*(1 - {}*z)^{})",
                            t.j,
                            wrap(t.delta.to_scalar().to_string()),
                            t.j
                        )
                    };
                    format!("{}*{zj}/{den}", wrap(t.gamma.to_scalar().to_string()))
                })
                .collect();
            parts.push(format!("exp({})", inner.join(" + ")));
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        f.write_str(&parts.join(" * "))
    }
}

impl fmt::Display for AnyClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        each_tier!(self, x => write!(f, "{x}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{gaussian, int, rat};

    fn rform(
        factors: &[(Rational, Rational)],
        terms: &[(Rational, Rational, usize)],
    ) -> ZetaClosedForm<Rational> {
        ZetaClosedForm::new(
            factors
                .iter()
                .map(|(a, b)| Factor {
                    alpha: a.clone(),
                    beta: b.clone(),
                })
                .collect(),
            terms
                .iter()
                .map(|(g, d, j)| ExpTerm {
                    gamma: g.clone(),
                    delta: d.clone(),
                    j: *j,
                })
                .collect(),
            Tier::Rational,
        )
    }

    #[test]
    fn canonical_merge_and_sort() {
        let f = rform(
            &[
                (int(2), int(1)),
                (int(6), int(2)),
                (int(2), int(2)),
                (int(5), int(0)),
            ],
            &[],
        );
        let got: Vec<_> = f
            .factors()
            .iter()
            .map(|x| (x.alpha.clone(), x.beta.clone()))
            .collect();
        assert_eq!(got, vec![(int(6), int(2)), (int(2), int(3))]);
    }

    #[test]
    fn one_point_expansion() {
        let f = rform(&[(int(1), int(1))], &[]);
        let s = f.expand(10).unwrap();
        assert!(s.coeffs().iter().all(|c| *c == int(1)));
        assert_eq!(f.to_string(), "(1 - 1*z)^-1");
    }

    #[test]
    fn interval_expansion() {
        // (1 − z)^{−2}·exp(z/(1 − z)) = 1 + 3z + 13/2 z² + 73/6 z³ + …
        let f = rform(&[(int(1), int(2))], &[(int(1), int(1), 1)]);
        let s = f.expand(3).unwrap();
        assert_eq!(s.coeffs(), &[int(1), int(3), rat(13, 2), rat(73, 6)]);
        assert_eq!(f.to_string(), "(1 - 1*z)^-2 * exp(1*z/(1 - 1*z))");
    }

    #[test]
    fn transient_term_is_polynomial_log() {
        let f = rform(&[], &[(int(4), int(0), 2)]);
        assert!(f.has_transient());
        assert_eq!(f.euler_sum(), None);
        let log = f.log_series(4);
        assert_eq!(log.coeffs(), &[int(0), int(0), int(2), int(0), int(0)]);
    }

    #[test]
    fn euler_sum_signs() {
        // acyclic shape: n − N̄1 + N̄2
        let f = rform(
            &[(int(1), int(3))],
            &[(int(3), int(1), 1), (int(1), int(1), 2)],
        );
        assert_eq!(f.euler_sum(), Some(int(1)));
    }

    #[test]
    fn gaussian_sum_is_real() {
        let f: ZetaClosedForm<ComplexRational> = ZetaClosedForm::new(
            vec![
                Factor {
                    alpha: gaussian(int(9), int(0)),
                    beta: gaussian(rat(252, 65), int(0)),
                },
                Factor {
                    alpha: gaussian(int(1), int(1)),
                    beta: gaussian(rat(-57, 130), rat(1, 130)),
                },
                Factor {
                    alpha: gaussian(int(1), int(-1)),
                    beta: gaussian(rat(-57, 130), rat(-1, 130)),
                },
            ],
            vec![],
            Tier::Gaussian,
        );
        assert_eq!(f.beta_sum(), gaussian(int(3), int(0)));
        assert_eq!(f.euler_sum(), Some(gaussian(int(0), int(0))));
        assert_eq!(f.factors()[1].alpha, gaussian(int(1), int(-1)));
    }
}
