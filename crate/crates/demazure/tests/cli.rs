use std::process::{Command, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("demazure").chain(args.iter().copied());
    let code = demazure::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{}", err);
    serde_json::from_str(&out).unwrap()
}

#[test]
fn latex_expansion_of_an_admissible_pair() {
    let (code, out, _) = run(&["expand", "Gpair", "--n", "2", "--nu", "1,1", "--lam", "0,2", "--format", "latex"]);
    assert_eq!(code, 0);
    assert_eq!(
        out.trim(),
        r"G_{\omega_1+\omega_2,2\omega_2}=s_{\omega_1+3\omega_2}+qs_{2\omega_1+\omega_2}+q[2]_qs_{2\omega_2}+q^2s_{\omega_1}"
    );
}

#[test]
fn latex_shows_factored_and_summed_coefficients() {
    let (_, out, _) = run(&["expand", "G", "--n", "2", "--lam", "3,3", "--format", "latex"]);
    assert!(out.contains(r"(2q^2+q)s_{2\omega_1+2\omega_2}"));
    assert!(out.contains(r"(q[2]_q)^2s_{\omega_1+\omega_2}"));
}

#[test]
fn json_expansion_shape() {
    let v = json(&["expand", "P", "--n", "2", "--nu", "1,1"]);
    assert_eq!(v["n"], 2);
    assert_eq!(v["basis"], "schur");
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[0]["weight"], serde_json::json!([1, 1]));
    assert_eq!(terms[0]["poly"], serde_json::json!({"0": 1}));
    assert_eq!(terms[1]["poly"], serde_json::json!({"1": 1}));
}

#[test]
fn partition_input_matches_omega_input() {
    let a = run(&["expand", "G", "--n", "2", "--lam", "3,1,0", "--partition"]);
    let b = run(&["expand", "G", "--n", "2", "--lam", "2,1"]);
    assert_eq!(a, b);
    let c = run(&["expand", "G", "--n", "2", "--lam", "4,2,1", "--partition"]);
    assert_eq!(c, b);
}

#[test]
fn output_is_deterministic() {
    let args = ["expand", "Gpair", "--n", "3", "--nu", "1,0,1", "--lam", "0,2,0"];
    assert_eq!(run(&args), run(&args));
    let args = ["verify", "--suite", "gprop", "--n-max", "2", "--ht-max", "4"];
    assert_eq!(run(&args), run(&args));
}

#[test]
fn matrix_rows() {
    let v = json(&["matrix", "h", "--n", "2", "--top", "1,1"]);
    assert_eq!(v["kind"], "h");
    assert_eq!(v["rows"][0]["mu"], serde_json::json!([1, 1]));
    assert_eq!(v["rows"][1]["mu"], serde_json::json!([0, 0]));
    assert_eq!(v["rows"][1]["poly"], serde_json::json!({"1": 1}));
    let v = json(&["matrix", "g0", "--n", "2", "--top", "1,1"]);
    assert_eq!(v["rows"][1]["poly"], serde_json::json!({"1": -1}));
    for kind in ["p", "a"] {
        let v = json(&["matrix", kind, "--n", "3", "--top", "0,2,0"]);
        assert_eq!(v["kind"], kind);
        assert_eq!(v["rows"][0]["poly"], serde_json::json!({"0": 1}));
    }
}

#[test]
fn sigma_sets() {
    let v = json(&["sigma", "--n", "3", "--lam", "1,0,1"]);
    let sets = v["sets"].as_array().unwrap();
    assert_eq!(sets.len(), 2);
    assert_eq!(sets[1], serde_json::json!({"s": 1, "r": 1, "weights": [[0, 0, 0]]}));
    let (code, _, err) = run(&["sigma", "--n", "3", "--lam", "2,0,0"]);
    assert_eq!(code, 2);
    assert!(err.contains("--lam"));
}

#[test]
fn dims_report() {
    let v = json(&["dims", "--n", "2", "--nu", "1,1", "--lam", "0,2"]);
    assert_eq!(v["dim"], 54);
    assert_eq!(v["dim_nu"], 9);
    assert_eq!(v["dim_lambda"], 6);
    assert_eq!(v["admissible"], true);
    assert_eq!(v["factorizes"], true);
}

#[test]
fn verify_passes_the_default_sweep() {
    let (code, out, _) = run(&["verify", "--suite", "all", "--n-max", "3", "--ht-max", "5"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
    let suites = v["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 18);
    assert!(suites.iter().all(|s| s["instances"].as_u64().unwrap() > 0));
}

#[test]
fn golden_fixtures_match() {
    let v = json(&["golden"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["count"], 16);
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[(&[&str], &str)] = &[
        (&["expand", "G", "--n", "0"], "--n"),
        (&["expand", "G", "--n", "2", "--lam", "1,1,1"], "expected 2 coordinates"),
        (&["expand", "G", "--n", "2", "--lam", "2,-1"], "not dominant"),
        (&["expand", "G", "--n", "2", "--lam", "1,x"], "not an integer"),
        (&["expand", "G", "--n", "2", "--lam", "1,2", "--partition"], "weakly decreasing"),
        (&["verify", "--suite", "bogus"], "unknown identity suite"),
        (&["verify", "--n-max", "0"], "--n-max"),
        (&["expand", "H", "--n", "2"], ""),
        (&["frobnicate"], ""),
    ];
    for (args, needle) in cases {
        let (code, out, err) = run(args);
        assert_eq!(code, 2, "{:?}", args);
        assert!(out.is_empty());
        assert!(err.contains(needle), "{:?}: {}", args, err);
    }
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("expand"));
}

#[test]
fn binary_writes_to_out_path() {
    let dir = std::env::temp_dir().join(format!("demazure-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p.json");
    let status = Command::new(env!("CARGO_BIN_EXE_demazure"))
        .args(["expand", "P", "--n", "2", "--nu", "1,1", "--out"])
        .arg(&path)
        .status()
        .unwrap();
    assert!(status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
    let status = Command::new(env!("CARGO_BIN_EXE_demazure")).args(["expand", "P", "--n", "0"])
        .stderr(Stdio::null())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}
