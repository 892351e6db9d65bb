//! Scalars and closed forms as JSON, plain text and LaTeX.

use catzeta_core::exactmath::{gaussian, ApproxComplex, QuadraticElem, Rational, Scalar};
use catzeta_core::zeta::ScalarForm;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

pub fn rational_json(r: &Rational) -> Value {
    json!({ "p": r.numer().to_string(), "q": r.denom().to_string() })
}

fn bigint_json(d: &BigInt) -> Value {
    i64::try_from(d)
        .map(Value::from)
        .unwrap_or_else(|_| Value::String(d.to_string()))
}

pub fn scalar_json(s: &Scalar) -> Value {
    match s {
        Scalar::Rational(r) => rational_json(r),
        Scalar::Quadratic(q) => json!({
            "a": rational_json(q.base()),
            "b": rational_json(q.coeff()),
            "d": bigint_json(q.radicand()),
        }),
        Scalar::Complex(c) => json!({ "re": rational_json(&c.re), "im": rational_json(&c.im) }),
        Scalar::Approx(a) => json!({ "re": a.re, "im": a.im, "err": a.err }),
    }
}

pub fn rational_from_json(v: &Value) -> Option<Rational> {
    let p: BigInt = v.get("p")?.as_str()?.parse().ok()?;
    let q: BigInt = v.get("q")?.as_str()?.parse().ok()?;
    (!q.is_zero()).then(|| Rational::new(p, q))
}

/// Inverse of [`scalar_json`].
pub fn scalar_from_json(v: &Value) -> Option<Scalar> {
    if v.get("p").is_some() {
        return rational_from_json(v).map(Scalar::Rational);
    }
    if let Some(d) = v.get("d") {
        let d: BigInt = match d {
            Value::Number(n) => n.as_i64()?.into(),
            Value::String(s) => s.parse().ok()?,
            _ => return None,
        };
        let (a, b) = (
            rational_from_json(v.get("a")?)?,
            rational_from_json(v.get("b")?)?,
        );
        return Some(Scalar::Quadratic(QuadraticElem::new(a, b, d)));
    }
    if let Some(err) = v.get("err") {
        return Some(Scalar::Approx(ApproxComplex {
            re: v.get("re")?.as_f64()?,
            im: v.get("im")?.as_f64()?,
            err: err.as_f64()?,
        }));
    }
    let (re, im) = (
        rational_from_json(v.get("re")?)?,
        rational_from_json(v.get("im")?)?,
    );
    Some(Scalar::Complex(gaussian(re, im)))
}

pub fn form_json(f: &ScalarForm) -> Value {
    json!({
        "factors": f.factors.iter()
            .map(|(a, b)| json!({ "alpha": scalar_json(a), "beta": scalar_json(b) }))
            .collect::<Vec<_>>(),
        "exp_terms": f.exp_terms.iter()
            .map(|(g, d, j)| json!({ "gamma": scalar_json(g), "delta": scalar_json(d), "j": j }))
            .collect::<Vec<_>>(),
    })
}

pub fn rational_latex(r: &Rational) -> String {
    if r.is_integer() {
        return r.numer().to_string();
    }
    let sign = if r.is_negative() { "-" } else { "" };
    format!("{sign}\\frac{{{}}}{{{}}}", r.numer().abs(), r.denom())
}

/// `a + b·u` where `u` is already LaTeX (`\sqrt{5}`, `i`).
fn binomial_latex(a: &Rational, b: &Rational, unit: &str) -> String {
    if b.is_zero() {
        return rational_latex(a);
    }
    let mag = b.abs();
    let coeff = if mag.is_one() {
        String::new()
    } else {
        rational_latex(&mag)
    };
    let tail = format!("{coeff}{unit}");
    match (a.is_zero(), b.is_negative()) {
        (true, false) => tail,
        (true, true) => format!("-{tail}"),
        (false, neg) => format!(
            "{} {} {tail}",
            rational_latex(a),
            if neg { "-" } else { "+" }
        ),
    }
}

pub fn scalar_latex(s: &Scalar) -> String {
    match s {
        Scalar::Rational(r) => rational_latex(r),
        Scalar::Quadratic(q) => {
            binomial_latex(q.base(), q.coeff(), &format!("\\sqrt{{{}}}", q.radicand()))
        }
        Scalar::Complex(c) => binomial_latex(&c.re, &c.im, "i"),
        Scalar::Approx(a) => {
            if a.im == 0.0 {
                format!("{:.12}", a.re)
            } else {
                format!(
                    "({:.12} {} {:.12}i)",
                    a.re,
                    if a.im < 0.0 { "-" } else { "+" },
                    a.im.abs()
                )
            }
        }
    }
}

fn grouped(s: String) -> String {
    if s.contains([' ', '-']) || s.contains("\\frac") {
        format!("\\left({s}\\right)")
    } else {
        s
    }
}

pub fn form_latex(f: &ScalarForm) -> String {
    let mut parts: Vec<String> = f
        .factors
        .iter()
        .map(|(a, b)| {
            let exp = match b.as_rational() {
                Some(r) if r.is_negative() => grouped(rational_latex(&-r)),
                _ => format!("-{}", grouped(scalar_latex(b))),
            };
            format!(
                "\\left(1 - {} z\\right)^{{{exp}}}",
                grouped(scalar_latex(a))
            )
        })
        .collect();
    if !f.exp_terms.is_empty() {
        let inner: Vec<String> = f
            .exp_terms
            .iter()
            .map(|(g, d, j)| {
                let zj = if *j == 1 {
                    "z".to_string()
                } else {
                    format!("z^{{{j}}}")
                };
                let jd = if *j == 1 {
                    String::new()
                } else {
                    j.to_string()
                };
                let pole = if d.same_value(&Scalar::Rational(Rational::zero())) {
                    String::new()
                } else if *j == 1 {
                    format!("\\left(1 - {} z\\right)", grouped(scalar_latex(d)))
                } else {
                    format!("\\left(1 - {} z\\right)^{{{j}}}", grouped(scalar_latex(d)))
                };
                let den = format!("{jd}{pole}");
                let num = format!("{} {zj}", grouped(scalar_latex(g)));
                if den.is_empty() {
                    num
                } else {
                    format!("\\frac{{{num}}}{{{den}}}")
                }
            })
            .collect();
        parts.push(format!("\\exp\\left({}\\right)", inner.join(" + ")));
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use catzeta_core::exactmath::{int, rat};

    #[test]
    fn scalar_json_round_trip() {
        let values = [
            Scalar::Rational(rat(-13, 4)),
            Scalar::Quadratic(QuadraticElem::new(rat(3, 2), rat(-1, 2), 5.into())),
            Scalar::Complex(gaussian(rat(-7, 37), rat(5, 37))),
            Scalar::Approx(ApproxComplex {
                re: 0.1 + 0.2,
                im: -1e-300,
                err: 3e-12,
            }),
        ];
        for v in &values {
            let back = scalar_from_json(&scalar_json(v)).unwrap();
            assert_eq!(format!("{back:?}"), format!("{v:?}"));
        }
    }

    #[test]
    fn latex_scalars() {
        assert_eq!(
            scalar_latex(&Scalar::Rational(rat(-13, 4))),
            "-\\frac{13}{4}"
        );
        assert_eq!(scalar_latex(&Scalar::Rational(int(8))), "8");
        let q = Scalar::Quadratic(QuadraticElem::new(rat(3, 2), rat(-1, 2), 5.into()));
        assert_eq!(scalar_latex(&q), "\\frac{3}{2} - \\frac{1}{2}\\sqrt{5}");
        assert_eq!(
            scalar_latex(&Scalar::Complex(gaussian(int(0), int(-1)))),
            "-i"
        );
    }

    #[test]
    fn latex_form() {
        let f = ScalarForm {
            factors: vec![(Scalar::Rational(int(8)), Scalar::Rational(rat(13, 4)))],
            exp_terms: vec![(Scalar::Rational(int(1)), Scalar::Rational(int(1)), 1)],
            tier: catzeta_core::exactmath::Tier::Rational,
        };
        assert_eq!(
            form_latex(&f),
            "\\left(1 - 8 z\\right)^{-\\left(\\frac{13}{4}\\right)} \\exp\\left(\\frac{1 z}{\\left(1 - 1 z\\right)}\\right)"
        );
    }
}
