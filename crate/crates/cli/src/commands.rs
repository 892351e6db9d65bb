//! The five subcommands. Each returns its JSON report plus an exit code;
//! text and LaTeX renderings are derived from the same data.

use std::fs;
use std::path::Path;

use catzeta_core::batch::map_ordered;
use catzeta_core::category::AdjacencyMatrix;
use catzeta_core::exactmath::{Rational, Tier};
use catzeta_core::nerve::{chain_counts, series_euler_to, Existence};
use catzeta_core::zeta::{
    check_conjecture_with, synthesize_closed_form, verify_coproduct, verify_exchange,
    verify_free_category_relation, verify_integral_expression, zeta_series, AnyClosedForm,
    ConjectureReport, IdentityCheck, Verdict,
};
use catzeta_core::Error;
use serde_json::{json, Value};

use crate::input::{Input, InputError};
use crate::render::{
    form_json, form_latex, rational_json, rational_latex, scalar_json, scalar_latex,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_CLAUSE_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_NUMERIC: u8 = 3;

const PREFIX_LEN: usize = 10;

#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub order: usize,
    pub tolerance: f64,
}

/// A finished command: JSON payload, text lines, LaTeX lines, exit code.
pub struct Outcome {
    pub json: Value,
    pub text: Vec<String>,
    pub latex: Vec<String>,
    pub code: u8,
}

#[derive(Debug)]
pub enum Failure {
    Input(String),
    Numeric(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => EXIT_INPUT,
            Failure::Numeric(_) => EXIT_NUMERIC,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Numeric(m) => m,
        }
    }
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e.0)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NumericFailure(_) | Error::Overflow | Error::Series(_) => {
                Failure::Numeric(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn tier_json(t: &Tier) -> Value {
    match t {
        Tier::Quadratic(d) => json!({ "kind": "quadratic", "d": d.to_string() }),
        Tier::Rational => json!({ "kind": "rational" }),
        Tier::Gaussian => json!({ "kind": "gaussian" }),
        Tier::Approximate => json!({ "kind": "approximate" }),
    }
}

fn opt_rational_json(r: &Option<Rational>) -> Value {
    r.as_ref().map(rational_json).unwrap_or(Value::Null)
}

fn opt_text(r: &Option<Rational>) -> String {
    r.as_ref()
        .map(|r| r.to_string())
        .unwrap_or_else(|| "none".into())
}

fn opt_latex(r: &Option<Rational>) -> String {
    r.as_ref()
        .map(rational_latex)
        .unwrap_or_else(|| "\\text{undefined}".into())
}

fn prefix(a: &AdjacencyMatrix) -> Vec<Rational> {
    zeta_series(a, PREFIX_LEN - 1).coeffs().to_vec()
}

/// Fields shared by `zeta` and `conjecture`.
fn closed_form_section(
    input: &Input,
    a: &AdjacencyMatrix,
    form: &AnyClosedForm,
    order: usize,
) -> Outcome {
    let series = prefix(a);
    let sf = form.to_scalars();
    let mut f = form_json(&sf);
    f["text"] = json!(form.to_string());
    f["transient"] = json!(form.has_transient());
    let json = json!({
        "input": input.to_json(),
        "objects": a.n(),
        "order": order,
        "tier": tier_json(form.tier()),
        "closed_form": f,
        "series_prefix": series.iter().map(rational_json).collect::<Vec<_>>(),
    });
    let text = vec![
        format!("input = {a}"),
        format!("tier = {}", form.tier()),
        format!("zeta = {form}"),
        format!(
            "series = {}, ...",
            series
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ),
    ];
    let latex = vec![format!("\\zeta(z) = {}", form_latex(&sf))];
    Outcome {
        json,
        text,
        latex,
        code: EXIT_OK,
    }
}

pub fn zeta(input: &Input, s: Settings) -> Result<Outcome, Failure> {
    let a = input.matrix()?;
    let form = synthesize_closed_form(&a)?;
    let mut out = closed_form_section(input, &a, &form, s.order);
    out.json["command"] = json!("zeta");
    Ok(out)
}

pub fn euler(input: &Input, s: Settings) -> Result<Outcome, Failure> {
    let a = input.matrix()?;
    let e = series_euler_to(&a, s.order);
    let existence = match &e.existence {
        Existence::Exists => json!("exists"),
        Existence::Pole {
            numerator,
            denominator,
        } => json!({
            "pole": { "numerator": rational_json(numerator), "denominator": rational_json(denominator) }
        }),
    };
    let poly = |p: &catzeta_core::exactmath::Poly| {
        p.coeffs().iter().map(rational_json).collect::<Vec<_>>()
    };
    let r = &e.rational_expression;
    let json = json!({
        "command": "euler",
        "input": input.to_json(),
        "objects": a.n(),
        "order": s.order,
        "series_euler": opt_rational_json(&e.series_euler),
        "leinster_euler": opt_rational_json(&e.leinster_euler),
        "existence": existence,
        "rational_expression": {
            "numerator": poly(r.numerator()),
            "denominator": poly(r.denominator()),
            "expansion_verified": e.expansion_verified,
        },
    });
    let text = vec![
        format!("input = {a}"),
        format!("chi_sigma = {}", opt_text(&e.series_euler)),
        format!("chi_leinster = {}", opt_text(&e.leinster_euler)),
        format!(
            "R(t) = ({}) / ({})",
            r.numerator().display_in("t"),
            r.denominator().display_in("t")
        ),
    ];
    let latex = vec![
        format!("\\chi_\\Sigma = {}", opt_latex(&e.series_euler)),
        format!("\\chi_L = {}", opt_latex(&e.leinster_euler)),
    ];
    Ok(Outcome {
        json,
        text,
        latex,
        code: EXIT_OK,
    })
}

fn verdict_json(v: Verdict) -> Value {
    json!(v.as_str())
}

fn report_outcome(
    input: &Input,
    a: &AdjacencyMatrix,
    r: &ConjectureReport,
    s: Settings,
) -> Outcome {
    let mut out = closed_form_section(input, a, &r.closed_form, s.order);
    let c3: Vec<Value> =
        r.c3.iter()
            .map(|c| {
                json!({
                    "alpha": scalar_json(&c.alpha),
                    "residual": scalar_json(&c.residual),
                    "verdict": verdict_json(c.verdict),
                })
            })
            .collect();
    out.json["command"] = json!("conjecture");
    out.json["tolerance"] = json!(r.tolerance);
    out.json["series_euler"] = opt_rational_json(&r.euler.series_euler);
    out.json["leinster_euler"] = opt_rational_json(&r.euler.leinster_euler);
    out.json["clauses"] = json!({
        "c1": {
            "verdict": verdict_json(r.c1.verdict),
            "in_form": r.c1.in_form,
            "expansion_error": r.c1.expansion_error,
            "order": r.c1.order,
        },
        "c2": {
            "verdict": verdict_json(r.c2.verdict),
            "beta_sum": scalar_json(&r.c2.beta_sum),
            "objects": r.c2.objects,
        },
        "c3": { "verdict": verdict_json(r.c3_verdict()), "bases": c3 },
        "c4": {
            "verdict": verdict_json(r.c4.verdict),
            "lhs": r.c4.lhs.as_ref().map(scalar_json).unwrap_or(Value::Null),
            "series_euler": opt_rational_json(&r.c4.series_euler),
        },
    });
    out.json["all_pass"] = json!(r.all_pass());

    let c1_note = if !r.c1.in_form {
        "polynomial transient outside the product form".to_string()
    } else if r.c1.expansion_error == 0.0 {
        format!("series matches exactly through order {}", r.c1.order)
    } else {
        format!(
            "expansion error {:e} through order {}",
            r.c1.expansion_error, r.c1.order
        )
    };
    let lhs =
        r.c4.lhs
            .as_ref()
            .map(|l| l.to_string())
            .unwrap_or_else(|| "undefined".into());
    let c4_note = match &r.c4.series_euler {
        Some(chi) => format!("lhs {lhs}, chi_sigma {chi}"),
        None => "chi_sigma does not exist".into(),
    };
    let verdict = if r.all_pass() { "pass" } else { "fail" };
    out.text.extend([
        format!("C1 shape       {:<4} {c1_note}", r.c1.verdict.as_str()),
        format!(
            "C2 exponents   {:<4} sum {} vs {} objects",
            r.c2.verdict.as_str(),
            r.c2.beta_sum,
            r.c2.objects
        ),
        format!(
            "C3 eigenvalues {:<4} {} bases checked",
            r.c3_verdict().as_str(),
            r.c3.len()
        ),
        format!("C4 euler       {:<4} {c4_note}", r.c4.verdict.as_str()),
        format!("result = {verdict}"),
    ]);
    out.latex.push(format!(
        "\\sum \\beta_i = {}, \\quad n = {}",
        scalar_latex(&r.c2.beta_sum),
        r.c2.objects
    ));
    if let Some(l) = &r.c4.lhs {
        out.latex.push(format!(
            "\\sum \\frac{{\\beta_i}}{{\\alpha_i}} = {}, \\quad \\chi_\\Sigma = {}",
            scalar_latex(l),
            opt_latex(&r.c4.series_euler)
        ));
    }
    out.code = if r.all_pass() {
        EXIT_OK
    } else {
        EXIT_CLAUSE_FAILED
    };
    out
}

pub fn conjecture(input: &Input, s: Settings) -> Result<Outcome, Failure> {
    let a = input.matrix()?;
    let r = check_conjecture_with(&a, s.order, s.tolerance)?;
    Ok(report_outcome(input, &a, &r, s))
}

fn identity_json(name: &str, c: &IdentityCheck) -> Value {
    json!({
        "name": name,
        "holds": c.holds,
        "order": c.order,
        "mismatch": c.mismatch.as_ref().map(|(k, d)| json!({ "index": k, "difference": rational_json(d) })),
    })
}

pub fn verify(input: &Input, s: Settings) -> Result<Outcome, Failure> {
    let a = input.matrix()?;
    let mut checks: Vec<(&str, IdentityCheck)> = vec![
        ("exchange", verify_exchange(&chain_counts(&a, s.order))),
        (
            "integral_expression",
            verify_integral_expression(&a, s.order)?,
        ),
    ];
    if let Some(c) = verify_coproduct(&a, s.order) {
        checks.push(("coproduct", c));
    }
    if let Input::Digraph(d) = input {
        checks.push(("free_category", verify_free_category_relation(d, s.order)?));
    }
    let all = checks.iter().all(|(_, c)| c.holds);
    let json = json!({
        "command": "verify",
        "input": input.to_json(),
        "objects": a.n(),
        "order": s.order,
        "identities": checks.iter().map(|(n, c)| identity_json(n, c)).collect::<Vec<_>>(),
        "all_hold": all,
    });
    let mut text = vec![format!("input = {a}")];
    let mut latex = Vec::new();
    for (name, c) in &checks {
        let status = if c.holds { "holds" } else { "fails" };
        let at = c
            .mismatch
            .as_ref()
            .map(|(k, _)| format!(" (first difference at z^{k})"))
            .unwrap_or_default();
        text.push(format!("{name:<20} {status} through order {}{at}", c.order));
        latex.push(format!(
            "\\text{{{}}}: \\text{{{status}}}",
            name.replace('_', " ")
        ));
    }
    text.push(format!("result = {}", if all { "pass" } else { "fail" }));
    Ok(Outcome {
        json,
        text,
        latex,
        code: if all { EXIT_OK } else { EXIT_CLAUSE_FAILED },
    })
}

struct Row {
    file: String,
    status: &'static str,
    code: u8,
    detail: Value,
    clauses: [String; 4],
}

fn batch_row(file: String, parsed: Result<Input, String>, s: Settings) -> Row {
    let fail = |status, code, msg: String| Row {
        file: file.clone(),
        status,
        code,
        detail: json!({ "error": msg }),
        clauses: Default::default(),
    };
    let input = match parsed {
        Ok(i) => i,
        Err(msg) => return fail("input-error", EXIT_INPUT, msg),
    };
    let run = input
        .matrix()
        .map_err(Failure::from)
        .and_then(|a| Ok((check_conjecture_with(&a, s.order, s.tolerance)?, a)));
    match run {
        Ok((r, a)) => {
            let out = report_outcome(&input, &a, &r, s);
            Row {
                file,
                status: if r.all_pass() { "pass" } else { "fail" },
                code: out.code,
                clauses: [
                    r.c1.verdict.as_str().into(),
                    r.c2.verdict.as_str().into(),
                    r.c3_verdict().as_str().into(),
                    r.c4.verdict.as_str().into(),
                ],
                detail: out.json,
            }
        }
        Err(Failure::Input(m)) => fail("input-error", EXIT_INPUT, m),
        Err(Failure::Numeric(m)) => fail("numeric-failure", EXIT_NUMERIC, m),
    }
}

/// Worst code wins: input errors, then numeric failures, then clause failures.
fn combine(codes: impl Iterator<Item = u8>) -> u8 {
    let rank = |c: u8| match c {
        EXIT_INPUT => 3,
        EXIT_NUMERIC => 2,
        EXIT_CLAUSE_FAILED => 1,
        _ => 0,
    };
    codes.max_by_key(|&c| rank(c)).unwrap_or(EXIT_OK)
}

pub fn batch(dir: &Path, s: Settings) -> Result<Outcome, Failure> {
    let entries =
        fs::read_dir(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<_> = entries
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| {
            p.is_file()
                && !p
                    .file_name()
                    .is_some_and(|n| n.to_string_lossy().starts_with('.'))
        })
        .collect();
    files.sort();
    let jobs: Vec<(String, Result<Input, String>)> = files
        .iter()
        .map(|p| {
            let name = p.file_name().unwrap().to_string_lossy().into_owned();
            let parsed = fs::read_to_string(p)
                .map_err(|e| e.to_string())
                .and_then(|t| Input::parse(&t).map_err(|e| e.0));
            (name, parsed)
        })
        .collect();
    let rows = map_ordered(&jobs, |(f, p)| batch_row(f.clone(), p.clone(), s));

    let count = |st: &str| rows.iter().filter(|r| r.status == st).count();
    let summary = json!({
        "files": rows.len(),
        "pass": count("pass"),
        "fail": count("fail"),
        "input_error": count("input-error"),
        "numeric_failure": count("numeric-failure"),
    });
    let json = json!({
        "command": "batch",
        "order": s.order,
        "rows": rows.iter().map(|r| json!({
            "file": r.file,
            "status": r.status,
            "clauses": if r.clauses[0].is_empty() { Value::Null } else { json!({
                "c1": r.clauses[0], "c2": r.clauses[1], "c3": r.clauses[2], "c4": r.clauses[3],
            }) },
            "report": r.detail,
        })).collect::<Vec<_>>(),
        "summary": summary,
    });

    let width = rows.iter().map(|r| r.file.len()).max().unwrap_or(4).max(4);
    let mut text = vec![format!(
        "{:<width$}  {:<15}  C1   C2   C3   C4",
        "file", "status"
    )];
    let mut latex = vec![
        "\\begin{tabular}{llllll}".to_string(),
        "file & status & C1 & C2 & C3 & C4 \\\\ \\hline".to_string(),
    ];
    for r in &rows {
        let c = |i: usize| {
            if r.clauses[i].is_empty() {
                "-"
            } else {
                r.clauses[i].as_str()
            }
        };
        text.push(format!(
            "{:<width$}  {:<15}  {:<4} {:<4} {:<4} {:<4}",
            r.file,
            r.status,
            c(0),
            c(1),
            c(2),
            c(3)
        ));
        latex.push(format!(
            "\\texttt{{{}}} & {} & {} & {} & {} & {} \\\\",
            r.file.replace('_', "\\_"),
            r.status,
            c(0),
            c(1),
            c(2),
            c(3)
        ));
    }
    latex.push("\\end{tabular}".into());
    text.push(format!(
        "{} files: {} pass, {} fail, {} input errors, {} numeric failures",
        rows.len(),
        count("pass"),
        count("fail"),
        count("input-error"),
        count("numeric-failure")
    ));
    Ok(Outcome {
        json,
        text,
        latex,
        code: combine(rows.iter().map(|r| r.code)),
    })
}
