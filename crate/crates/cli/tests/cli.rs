use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use sha2::{Digest, Sha256};

fn compsign(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_compsign"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn counts_of_123() {
    let o = compsign(&["counts", "-A", "{1,2,3}", "-N", "4"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("n,c_A(n)\n"));
    assert_eq!(text.lines().last(), Some("4,7"));
}

#[test]
fn polys_triangle_rows_sum_to_counts() {
    let o = compsign(&["polys", "-A", "{1,2}", "-N", "5"]);
    assert_eq!(code(&o), 0);
    let mut totals = [0u64; 6];
    for line in stdout(&o).lines().skip(1) {
        let f: Vec<u64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        totals[f[0] as usize] += f[2];
    }
    assert_eq!(totals, [1, 1, 2, 3, 5, 8]);
}

#[test]
fn sk_all_routes_agree() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = compsign(&["sk", "-A", "{1,2,3}", "-K", "1", "-N", "4", "--route", "all", "--out", out]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().any(|l| l == "1,4,1"));
    let report: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("crosscheck.json")).unwrap()).unwrap();
    assert_eq!(report["consistent"], true);
}

#[test]
fn single_routes_match() {
    let reference = stdout(&compsign(&["sk", "-A", "N+\\{2}", "-K", "2", "-N", "15", "--route", "direct"]));
    for route in ["fast", "q", "conv"] {
        let o = compsign(&["sk", "-A", "N+\\{2}", "-K", "2", "-N", "15", "--route", route]);
        assert_eq!(stdout(&o), reference, "{route}");
    }
}

#[test]
fn nonperiodic_23_is_certified() {
    let o = compsign(&["nonperiodic", "-A", "{2,3}"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["report"]["verdict"], "NotEventuallyPeriodic");
}

#[test]
fn nonperiodic_from_coefficients_with_exact_screen() {
    let o = compsign(&["nonperiodic", "-p", "1,0,1,1", "--exact", "--bridge", "2000,50,200"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["report"]["exact"]["certified"], true);
    assert_eq!(v["bridge"]["verdict"], "NoPeriodFound");
}

#[test]
fn inconclusive_certificate_exits_2() {
    let o = compsign(&["nonperiodic", "-p", "1,1,1"]);
    assert_eq!(code(&o), 2);
    assert_eq!(json(&o)["report"]["verdict"], "Inconclusive");
}

#[test]
fn usage_errors_exit_3() {
    assert_eq!(code(&compsign(&["frobnicate"])), 3);
    assert_eq!(code(&compsign(&["counts", "-A", "{1,2"])), 3);
    assert_eq!(code(&compsign(&["counts", "-A", "{1,2", "-N", "3"])), 3);
    assert_eq!(code(&compsign(&["counts", "-A", "{1,2}@10", "-N", "11"])), 3);
    assert_eq!(code(&compsign(&["verify", "--suite", "prop33"])), 3);
    assert_eq!(code(&compsign(&["signs", "-A", "{1,2}", "-k", "0", "-N", "5", "--detect", "3"])), 3);
    assert_eq!(code(&compsign(&["nonperiodic", "-p", "1,x"])), 3);
}

#[test]
fn help_exits_0() {
    let o = compsign(&["--help"]);
    assert_eq!(code(&o), 0);
    for sub in ["counts", "polys", "sk", "signs", "verify", "nonperiodic", "enumerate", "construct", "experiment"] {
        assert!(stdout(&o).contains(sub), "{sub}");
    }
}

#[test]
fn verify_suites_pass() {
    let runs: &[&[&str]] = &[
        &["--suite", "section2", "-A", "{1,3,4}", "-N", "25", "-K", "2"],
        &["--suite", "prop33", "-m", "5", "-N", "80"],
        &["--suite", "thm34", "-E", "{2,6}", "-N", "60"],
        &["--suite", "thm36", "-B", "{1,5}", "-N", "60"],
        &["--suite", "union", "-A", "{1,4}", "-B", "{2,7}", "-N", "40"],
        &["--suite", "oddset", "-A", "{3,5,7}", "-N", "80"],
        &["--suite", "conjecture", "-m", "2", "-k", "6", "-N", "600"],
    ];
    for r in runs {
        let mut args = vec!["verify"];
        args.extend_from_slice(r);
        let o = compsign(&args);
        assert_eq!(code(&o), 0, "{r:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn short_conjecture_run_is_inconclusive() {
    let o = compsign(&["verify", "--suite", "conjecture", "-m", "2", "-k", "6", "-N", "12"]);
    assert_eq!(code(&o), 2);
    assert_eq!(json(&o)["finding"]["verdict"], "NoPeriodFound");
}

#[test]
fn signs_detect_period() {
    let o = compsign(&["signs", "-A", "1..2", "-k", "6", "-N", "600", "--normalized", "--detect", "400,24"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["finding"]["period"], 6);
    assert_eq!(v["finding"]["verdict"], "ConsistentAtHorizon");
    assert_eq!(v["word"].as_str().unwrap().len(), 601);
}

#[test]
fn construct_and_experiments() {
    let o = compsign(&["construct", "--thm36", "-B", "{1,3}", "-N", "40"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["A"], "{1,3,4}@1000");

    let o = compsign(&["experiment", "--problem44", "-m", "4", "--horizon", "150"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["A"], "{1,4,5,21,85}");

    let o = compsign(&["experiment", "--superset", "-A", "{2,3}", "--horizon", "100"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["additions"], serde_json::json!([[1]]));
}

#[test]
fn qseries_of_123() {
    let o = compsign(&["qseries", "-A", "{1,2,3}", "-N", "4"]);
    assert_eq!(code(&o), 0);
    let nums: Vec<String> = json(&o)["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["num"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(nums, ["1", "-1", "0", "3", "-6"]);
}

fn sha(path: &Path) -> String {
    hex::encode(Sha256::digest(fs::read(path).unwrap()))
}

#[test]
fn manifest_digests_match_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = compsign(&["enumerate", "-N", "7", "--horizon", "60", "--out", out]);
    assert_eq!(code(&o), 0);
    let m: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("manifest.json")).unwrap()).unwrap();
    assert_eq!(m["subcommand"], "enumerate");
    assert_eq!(m["parameters"]["horizon"], "60");
    let outputs = m["outputs"].as_array().unwrap();
    assert_eq!(outputs.len(), 2);
    for entry in outputs {
        let path = dir.path().join(entry["path"].as_str().unwrap());
        assert_eq!(entry["sha256"].as_str().unwrap(), sha(&path));
    }
    let csv = fs::read_to_string(dir.path().join("verdicts.csv")).unwrap();
    assert!(csv.starts_with("mask,set,k0_ok,first_violation\n"));
    assert_eq!(csv.lines().count(), 129);
}

#[test]
fn manifest_on_stderr_without_out() {
    let o = compsign(&["counts", "-A", "{1,2}", "-N", "3"]);
    let m: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(m["outputs"][0]["path"], "-");
    assert_eq!(m["outputs"][0]["sha256"], hex::encode(Sha256::digest(&o.stdout)));
    assert_eq!(m["sets"][0], "{1,2}@1000");
}

#[test]
fn outputs_are_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        let o = compsign(&["enumerate", "-N", "9", "--horizon", "80", "--out", d.path().to_str().unwrap()]);
        assert_eq!(code(&o), 0);
    }
    for f in ["enumeration.json", "verdicts.csv"] {
        assert_eq!(sha(&a.path().join(f)), sha(&b.path().join(f)), "{f}");
    }
}

#[test]
fn config_file_is_applied() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cert.conf");
    fs::write(&cfg, "# tighter\nprecision=320\ntol=2^-160\nexact=true\n").unwrap();
    let o = compsign(&["nonperiodic", "-A", "{2,3}", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["report"]["config"]["precision"], 320);
    assert_eq!(v["report"]["config"]["exact"], true);

    fs::write(&cfg, "precision=32\n").unwrap();
    assert_eq!(code(&compsign(&["nonperiodic", "-A", "{2,3}", "--config", cfg.to_str().unwrap()])), 3);
    fs::write(&cfg, "colour=red\n").unwrap();
    assert_eq!(code(&compsign(&["counts", "-A", "{1}", "-N", "2", "--config", cfg.to_str().unwrap()])), 3);
}
