use std::process::{Command, Output};

use h3_dunkl::waves::norm_invariant_phi;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_h3dunkl")).args(args).output().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{}: {}", e, String::from_utf8_lossy(&o.stdout)))
}

#[test]
fn group_census() {
    let o = run(&["group", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["census"]["order"], 120);
    assert_eq!(v["census"]["reflections"], 15);
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 15);
}

#[test]
fn verify_group_report() {
    let o = run(&["verify", "group", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["passed"], true);
    let checks = v["reports"][0]["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] == "pass" && c["anchor"].is_string()));
    let text = run(&["verify", "group"]);
    assert!(String::from_utf8_lossy(&text.stdout).contains("PASS group.census"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["waves", "phi"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["dunkl", "apply", "--poly", "x1 +"]).status.code(), Some(2));
    let capped = Command::new(env!("CARGO_BIN_EXE_h3dunkl"))
        .args(["waves", "q", "--n", "6"])
        .env("H3DUNKL_DEGREE_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
}

#[test]
fn invariant_norm() {
    let o = run(&["waves", "phi", "--n", "6", "--invariant", "--norm", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["norm_sq"], norm_invariant_phi(3).to_string());
    assert_eq!(v["display_form_agrees"], true);
}

#[test]
fn dunkl_apply_and_poly_file() {
    let o = run(&["dunkl", "apply", "--poly", "x1^3", "--dir", "1", "--format", "json"]);
    let v = json(&o);
    let want = h3_dunkl::polyalg::MultiPoly::parse("(3 + 23*k/2)*x1^2 - (k/2)*(tau - 7)*x2^2 + (k/2)*(tau + 6)*x3^2").unwrap();
    assert_eq!(v["result"], want.to_string());

    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli_poly.txt");
    std::fs::write(&path, "x1^2 + x2^2 + x3^2\n").unwrap();
    let o = run(&["dunkl", "apply", "--op", "laplacian", "--poly-file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let got = h3_dunkl::polyalg::MultiPoly::parse(String::from_utf8_lossy(&o.stdout).trim()).unwrap();
    assert_eq!(got, h3_dunkl::polyalg::MultiPoly::parse("60*k + 6").unwrap());
}

#[test]
fn pair_kinds_agree_at_integer_kappa() {
    let l2 = json(&run(&["pair", "--kind", "l2", "--left", "q:2", "--right", "x2*x3", "--kappa", "1", "--format", "json"]));
    let mo = json(&run(&["pair", "--kind", "moments", "--left", "q:2", "--right", "x2*x3", "--kappa", "1", "--format", "json"]));
    assert_eq!(l2["value"], mo["value"]);
}

#[test]
fn numeric_pair() {
    let v = json(&run(&["numeric", "pair", "--left", "x1", "--kappa", "0", "--samples", "100000", "--exact", "--format", "json"]));
    assert!((v["exact"].as_f64().unwrap() - 0.5).abs() < 1e-12);
    assert!(v["z"].as_f64().unwrap().abs() < 4.0);
}

#[test]
fn fixed_kappa_specializes_the_input() {
    use h3_dunkl::polyalg::MultiPoly;
    let v = json(&run(&["dunkl", "apply", "--op", "jsquare", "--poly", "phi:2", "--kappa", "1", "--format", "json"]));
    let got = MultiPoly::parse(v["result"].as_str().unwrap()).unwrap();
    let phi2 = MultiPoly::parse(v["input"].as_str().unwrap()).unwrap();
    assert!(phi2.terms().all(|(_, c)| c.as_golden().is_some()), "input still depends on κ: {}", phi2);
    assert_eq!(got, phi2.scale_int(-294));
}
