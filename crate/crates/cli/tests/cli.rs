use std::fs;
use std::process::Command;

use catzeta_cli::render::{rational_from_json, scalar_from_json};
use catzeta_core::category::AdjacencyMatrix;
use catzeta_core::exactmath::{rat, Scalar};
use catzeta_core::zeta::synthesize_closed_form;
use serde_json::Value;

fn run(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_catzeta"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        out.status.code().unwrap_or(-1),
    )
}

fn run_json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let (out, code) = run(&all);
    (
        serde_json::from_str(&out).unwrap_or_else(|e| panic!("not JSON ({e}): {out}")),
        code,
    )
}

const FRACTIONAL: &str = "[[2,3,5],[2,3,5],[2,1,3]]";
const NINE_CUBED: &str = "[[2,2,2],[2,2,2],[2,8,5]]";
const GAUSS_37: &str = "[[2,3,2],[1,2,6],[1,1,2]]";
const GAUSS_130: &str = "[[4,7,8],[1,4,5],[1,1,3]]";

#[test]
fn one_point_text() {
    let (out, code) = run(&["zeta", "--matrix", "[[1]]"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "zeta = (1 - 1*z)^-1"), "{out}");
}

#[test]
fn fractional_exponent_factor_list() {
    let (j, code) = run_json(&["zeta", "--matrix", FRACTIONAL]);
    assert_eq!(code, 0);
    let f = j["closed_form"]["factors"].as_array().unwrap();
    assert_eq!(f.len(), 1);
    assert_eq!(rational_from_json(&f[0]["alpha"]), Some(rat(8, 1)));
    assert_eq!(rational_from_json(&f[0]["beta"]), Some(rat(13, 4)));
    assert_eq!(j["series_prefix"].as_array().unwrap().len(), 10);
}

#[test]
fn quadratic_tier_report() {
    let (j, _) = run_json(&["zeta", "--matrix", "[[1,1],[1,2]]"]);
    assert_eq!(j["tier"]["kind"], "quadratic");
    assert_eq!(j["tier"]["d"], "5");
    assert_eq!(j["closed_form"]["factors"][0]["alpha"]["d"], 5);
}

#[test]
fn json_scalars_round_trip() {
    for m in [
        FRACTIONAL,
        GAUSS_37,
        GAUSS_130,
        "[[1,1],[1,2]]",
        "[[1,0,1],[0,2,1],[1,1,1]]",
    ] {
        let (j, code) = run_json(&["zeta", "--matrix", m]);
        assert_eq!(code, 0, "{m}");
        let rows: Vec<Vec<i64>> = serde_json::from_str(m).unwrap();
        let want = synthesize_closed_form(&AdjacencyMatrix::validate(&rows).unwrap())
            .unwrap()
            .to_scalars();
        let got: Vec<(Scalar, Scalar)> = j["closed_form"]["factors"]
            .as_array()
            .unwrap()
            .iter()
            .map(|f| {
                (
                    scalar_from_json(&f["alpha"]).unwrap(),
                    scalar_from_json(&f["beta"]).unwrap(),
                )
            })
            .collect();
        assert_eq!(got.len(), want.factors.len());
        for ((a, b), (wa, wb)) in got.iter().zip(&want.factors) {
            assert_eq!(format!("{a:?}"), format!("{wa:?}"), "{m}");
            assert_eq!(format!("{b:?}"), format!("{wb:?}"), "{m}");
        }
    }
}

#[test]
fn euler_values() {
    let (j, _) = run_json(&["euler", "--matrix", NINE_CUBED]);
    assert_eq!(rational_from_json(&j["series_euler"]), Some(rat(1, 3)));
    assert_eq!(rational_from_json(&j["leinster_euler"]), Some(rat(1, 2)));
    let (j, _) = run_json(&["euler", "--matrix", FRACTIONAL]);
    assert!(j["series_euler"].is_null());
    let (out, _) = run(&["euler", "--matrix", "[[1]]"]);
    assert!(
        out.contains("chi_sigma = 1\n") && out.contains("chi_leinster = 1\n"),
        "{out}"
    );
}

#[test]
fn conjecture_exit_codes() {
    let (j, code) = run_json(&["conjecture", "--matrix", GAUSS_130]);
    assert_eq!((code, &j["all_pass"]), (0, &Value::Bool(true)));
    let (j, code) = run_json(&["conjecture", "--matrix", FRACTIONAL]);
    assert_eq!(code, 1);
    assert_eq!(j["clauses"]["c2"]["verdict"], "fail");
    assert_eq!(
        rational_from_json(&j["clauses"]["c2"]["beta_sum"]),
        Some(rat(13, 4))
    );
    assert_eq!(run(&["conjecture", "--matrix", "[[3,3],[3,3]]"]).1, 0);
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(run(&["zeta", "--matrix", "[[1,2],[3]]"]).1, 2);
    assert_eq!(run(&["zeta", "--matrix", "[[0]]"]).1, 2);
    assert_eq!(run(&["zeta", "--matrix", "1 a"]).1, 2);
    assert_eq!(run(&["zeta", "--input", "/nonexistent/file"]).1, 2);
    let (j, code) = run_json(&["zeta", "--matrix", "[[1,2],[3]]"]);
    assert_eq!((code, &j["error"]["kind"]), (2, &Value::from("input")));
    // clap usage errors also exit with 2
    assert_eq!(run(&["zeta", "--order", "0", "--matrix", "[[1]]"]).1, 2);
}

#[test]
fn verify_suite() {
    let (j, code) = run_json(&["verify", "--matrix", "[[1,1],[0,1]]"]);
    assert_eq!(code, 0);
    assert_eq!(j["all_hold"], true);
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("dag.json");
    fs::write(
        &p,
        r#"{"digraph": {"v": 3, "arcs": [[0, 1, 1], [1, 2, 2], [0, 2, 1]]}}"#,
    )
    .unwrap();
    let (j, code) = run_json(&["verify", "--input", p.to_str().unwrap(), "--order", "20"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = j["identities"]
        .as_array()
        .unwrap()
        .iter()
        .map(|i| i["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"free_category"), "{names:?}");
    assert_eq!(run(&["verify", "--matrix", "[[1]]"]).1, 0);
    let (j, _) = run_json(&["verify", "--matrix", "[[1,0],[0,2]]"]);
    assert!(j["identities"]
        .as_array()
        .unwrap()
        .iter()
        .any(|i| i["name"] == "coproduct"));
}

#[test]
fn output_is_deterministic() {
    for cmd in ["zeta", "conjecture", "euler", "verify"] {
        let a = run(&[cmd, "--matrix", GAUSS_37, "--format", "json"]);
        let b = run(&[cmd, "--matrix", GAUSS_37, "--format", "json"]);
        assert_eq!(a, b, "{cmd}");
    }
}

#[test]
fn latex_output() {
    let (out, _) = run(&["zeta", "--matrix", FRACTIONAL, "--format", "latex"]);
    assert_eq!(
        out.trim(),
        "\\zeta(z) = \\left(1 - 8 z\\right)^{-\\left(\\frac{13}{4}\\right)}"
    );
}

#[test]
fn batch_summary() {
    let dir = tempfile::tempdir().unwrap();
    for (name, m) in [
        ("a.txt", FRACTIONAL),
        ("b.txt", NINE_CUBED),
        ("c.txt", GAUSS_37),
        ("d.txt", GAUSS_130),
    ] {
        fs::write(dir.path().join(name), m).unwrap();
    }
    let d = dir.path().to_str().unwrap();
    let (j, code) = run_json(&["batch", "--input", d, "--order", "20"]);
    assert_eq!(code, 1);
    assert_eq!(j["summary"]["pass"], 3);
    assert_eq!(j["summary"]["fail"], 1);
    let files: Vec<&str> = j["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["file"].as_str().unwrap())
        .collect();
    assert_eq!(files, ["a.txt", "b.txt", "c.txt", "d.txt"]);
    assert_eq!(j["rows"][0]["clauses"]["c2"], "fail");
    assert_eq!(
        run(&["batch", "--input", d, "--order", "20"]),
        run(&["batch", "--input", d, "--order", "20"])
    );

    fs::write(dir.path().join("broken.txt"), "1 2\n3").unwrap();
    let (j, code) = run_json(&["batch", "--input", d, "--order", "20"]);
    assert_eq!(code, 2);
    assert_eq!(j["rows"][1]["file"], "b.txt");
    assert_eq!(j["rows"][2]["file"], "broken.txt");
    assert_eq!(j["rows"][2]["status"], "input-error");
    assert_eq!(j["summary"]["input_error"], 1);
}

#[test]
fn batch_empty_directory() {
    let dir = tempfile::tempdir().unwrap();
    let (j, code) = run_json(&["batch", "--input", dir.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(j["summary"]["files"], 0);
    assert!(j["rows"].as_array().unwrap().is_empty());
}
