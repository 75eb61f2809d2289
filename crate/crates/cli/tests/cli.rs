use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn ppsign(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ppsign"))
        .args(args)
        .env_remove("PPSIGN_NODE_BUDGET")
        .env_remove("PPSIGN_SUBSET_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let o = ppsign(&all);
    let v = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("bad json ({e}): {}", stdout(&o)));
    (v, o.status.code().unwrap())
}

fn values(report: &Value) -> Vec<String> {
    report["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["value"].as_str().unwrap_or("null").to_string())
        .collect()
}

#[test]
fn tc_all_methods_agree() {
    let (v, code) = json(&["enumerate", "--class", "tc", "--a", "3", "--b", "1", "--method", "all"]);
    assert_eq!(code, 0);
    assert_eq!(values(&v), ["1", "1", "1"]);
    assert_eq!(v["verdict"], "OK");
    let r = &v["results"][0];
    assert_eq!(r["box"], serde_json::json!([3, 3, 2]));
    assert_eq!(r["sign_convention"], "reference");
    assert!(r["elapsed_ms"].is_null());
}

#[test]
fn sc_cube_of_two() {
    let (v, code) = json(&["enumerate", "--class", "sc", "--a", "2", "--b", "2", "--c", "2", "--method", "all"]);
    assert_eq!(code, 0);
    assert_eq!(values(&v), ["2", "2", "2"]);
}

#[test]
fn tc_zero_when_a_even_and_b_odd() {
    let (v, code) = json(&["enumerate", "--class", "tc", "--a", "2", "--b", "1"]);
    assert_eq!(code, 0);
    assert_eq!(values(&v), ["0"]);
    assert_eq!(v["results"][0]["method"], "formula");
}

#[test]
fn cube_classes_accept_alpha() {
    let (v, _) = json(&["enumerate", "--class", "cstc", "--alpha", "2", "--method", "all"]);
    assert_eq!(v["results"][0]["box"], serde_json::json!([4, 4, 4]));
    assert_eq!(v["verdict"], "OK");
}

#[test]
fn unsupported_method_is_recorded_in_all_mode() {
    let (v, code) = json(&["enumerate", "--class", "stc", "--a", "3", "--b", "2", "--method", "all"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][2]["status"], "unsupported");
    assert!(v["results"][2]["value"].is_null());
    assert_eq!(v["verdict"], "OK");
}

#[test]
fn unsupported_single_method_is_an_input_error() {
    let o = ppsign(&["enumerate", "--class", "stc", "--a", "3", "--b", "2", "--method", "formula"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn incompatible_box_is_rejected() {
    let o = ppsign(&["enumerate", "--class", "sc", "--a", "3", "--b", "3", "--c", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("incompatible"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(ppsign(&["enumerate", "--class", "nope", "--a", "1"]).status.code(), Some(2));
    assert_eq!(ppsign(&["enumerate", "--class", "tc"]).status.code(), Some(2));
    assert_eq!(ppsign(&["bogus"]).status.code(), Some(2));
    assert_eq!(ppsign(&["identity", "--name", "m1", "--alpha", "2", "--b", "x"]).status.code(), Some(2));
    assert_eq!(ppsign(&["--node-budget", "0", "verify", "--smoke"]).status.code(), Some(2));
}

#[test]
fn budget_skip_and_strict() {
    let args = ["enumerate", "--class", "tc", "--a", "6", "--b", "3", "--method", "all", "--node-budget", "10"];
    let o = ppsign(&args);
    assert_eq!(o.status.code(), Some(0));
    let mut strict = args.to_vec();
    strict.push("--strict");
    assert_eq!(ppsign(&strict).status.code(), Some(3));
}

#[test]
fn flag_beats_environment() {
    let run = |extra: &[&str]| {
        let mut args = vec!["--format", "json", "enumerate", "--class", "tc", "--a", "6", "--b", "3", "--method", "oracle"];
        args.extend_from_slice(extra);
        let o = Command::new(env!("CARGO_BIN_EXE_ppsign"))
            .args(&args)
            .env("PPSIGN_NODE_BUDGET", "10")
            .output()
            .unwrap();
        let v: Value = serde_json::from_slice(&o.stdout).unwrap();
        v["results"][0]["status"].as_str().map(str::to_string)
    };
    assert_eq!(run(&[]).as_deref(), Some("skipped"));
    assert_eq!(run(&["--node-budget", "100000000"]), None);
}

#[test]
fn sign_convention_override() {
    let (v, _) = json(&[
        "enumerate", "--class", "sc", "--a", "2", "--b", "2", "--c", "2", "--sign-convention", "scpp=absolute",
    ]);
    assert_eq!(v["results"][0]["sign_convention"], "absolute");
    let o = ppsign(&["--sign-convention", "scpp=loud", "enumerate", "--class", "sc", "--a", "2", "--b", "2", "--c", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_tc_grid() {
    let (v, code) = json(&["verify", "--class", "tc", "--max-a", "5", "--max-b", "3"]);
    assert_eq!(code, 0);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 5 * 4);
    assert!(rows.iter().all(|r| r["match"] == true));
}

#[test]
fn verify_cssc() {
    let (v, code) = json(&["verify", "--class", "csscpp", "--max-alpha", "3"]);
    assert_eq!(code, 0);
    let formulas: Vec<_> = v.as_array().unwrap().iter().map(|r| r["formula"].as_str().unwrap().to_string()).collect();
    assert_eq!(formulas, ["1", "2", "7"]);
}

#[test]
fn verify_smoke_all_families() {
    let (v, code) = json(&["verify", "--smoke"]);
    assert_eq!(code, 0);
    let rows = v.as_array().unwrap();
    for family in ["tc", "stc", "cstc", "tssc", "sc", "sc-odd", "cssc"] {
        assert!(rows.iter().any(|r| r["family"] == family), "{family} missing");
    }
}

#[test]
fn verify_strict_with_skipped_oracle() {
    let o = ppsign(&["--strict", "verify", "--class", "tc", "--max-a", "3", "--max-b", "1", "--oracle-max-cells", "1"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn identity_examples() {
    let (v, code) = json(&["identity", "--name", "mrr", "--n", "4", "--mu", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v[0]["passed"], true);

    let (v, code) = json(&["identity", "--name", "pfaff-saalschutz", "--fuzz", "100", "--seed", "7"]);
    assert_eq!(code, 0);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 100);
    assert!(rows.iter().all(|r| r["passed"] == true));

    let (v, code) = json(&["identity", "--name", "detl", "--n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v[0]["lhs"], v[0]["rhs"]);
}

#[test]
fn identity_fixed_parameters() {
    for args in [
        vec!["--name", "2ji", "--alpha", "3", "--beta", "-1", "--gamma", "1"],
        vec!["--name", "m1", "--alpha", "4", "--b", "5"],
        vec!["--name", "pfaff-saalschutz", "--a", "1/2", "--b", "-3/4", "--c", "5/3", "--n", "3"],
        vec!["--name", "minor-summation", "--p", "6", "--n", "4"],
        vec!["--name", "recurrence-s4", "--alpha", "3", "--b", "5", "--t", "2"],
        vec!["--name", "mrr", "--n", "3", "--mu", "-3/2"],
    ] {
        let mut full = vec!["identity"];
        full.extend(args.iter().copied());
        let o = ppsign(&full);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(stdout(&o).starts_with("PASS"), "{args:?}");
    }
}

#[test]
fn identity_sweeps_pass() {
    for name in ["detl", "2ji", "m1", "mrr", "pfaff-saalschutz", "minor-summation", "recurrence-s4"] {
        let o = ppsign(&["--format", "tsv", "identity", "--name", name]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        assert!(!stdout(&o).contains("\tfalse"), "{name}");
    }
}

#[test]
fn json_output_is_deterministic() {
    for args in [
        vec!["--format", "json", "verify", "--smoke"],
        vec!["--format", "json", "identity", "--name", "minor-summation", "--fuzz", "20", "--seed", "3"],
        vec!["--format", "json", "enumerate", "--class", "cssc", "--alpha", "2", "--method", "all"],
    ] {
        let a = ppsign(&args).stdout;
        let b = ppsign(&args).stdout;
        assert!(!a.is_empty());
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn timing_fills_elapsed() {
    let (v, _) = json(&["--timing", "enumerate", "--class", "tc", "--a", "3", "--b", "1"]);
    assert!(v["results"][0]["elapsed_ms"].is_number());
}

#[test]
fn tsv_has_header() {
    let o = ppsign(&["--format", "tsv", "enumerate", "--class", "tc", "--a", "3", "--b", "1", "--method", "all"]);
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "class\tbox\tmethod\tvalue\tsign_convention\telapsed_ms");
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("tcpp\t3x3x2\toracle\t1\t"));
}

#[test]
fn out_writes_file() {
    let path: PathBuf = std::env::temp_dir().join(format!("ppsign-out-{}.json", std::process::id()));
    let o = ppsign(&["--format", "json", "--out", path.to_str().unwrap(), "enumerate", "--class", "tc", "--a", "3", "--b", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(values(&v), ["1"]);
}
