use std::process::{Command, Output};

use pschen_core::bracket::{chen_bracket, BracketBreakdown};
use serde_json::Value;

fn pschen(args: &[&str], cache: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pschen"))
        .args(args)
        .env("PSCHEN_CACHE", cache)
        .env("PSCHEN_CONFIG", cache.join("no-such-config"))
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn pairs_iterate_three() {
    let dir = tempfile::tempdir().unwrap();
    let o = pschen(&["pairs", "--iterate", "3"], dir.path());
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1/30 13/15");
}

#[test]
fn bracket_json_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    let o = pschen(&["bracket", "--xi", "0.47284", "--tol", "1e-9", "--json"], dir.path());
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["artifact_version"].is_string());
    assert!(v["runtime_seconds"].as_f64().unwrap() >= 0.0);
    let b: BracketBreakdown = serde_json::from_value(v["result"].clone()).unwrap();
    assert_eq!(b, chen_bracket(0.47284, 1e-9).unwrap());
    assert!(b.total >= 0.000109508 - b.quad_error);
}

#[test]
fn level_near_one() {
    let dir = tempfile::tempdir().unwrap();
    let o = pschen(&["level", "--gamma", "0.99999999999", "--pairs", "a36,a3", "--json"], dir.path());
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let want = 9.0 / 19.0 - ((1u64 << 38) + 17) as f64 * 1e-11 / 38.0;
    assert!((v["result"]["xi"].as_f64().unwrap() - want).abs() < 1e-10);
    assert_eq!(v["result"]["binding_constraint"], "decomposition_c");
    assert_eq!(v["result"]["feasible"], true);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(pschen(&["sievefn", "--kind", "F", "--s", "6"], dir.path()).status.code(), Some(2));
    assert_eq!(pschen(&["bracket", "--xi", "0.2"], dir.path()).status.code(), Some(2));
    assert_eq!(pschen(&["bracket", "--bogus"], dir.path()).status.code(), Some(64));
    assert_eq!(pschen(&["frobnicate"], dir.path()).status.code(), Some(64));
    assert_eq!(pschen(&["sievefn", "--kind", "g", "--s", "3"], dir.path()).status.code(), Some(64));
    assert_eq!(pschen(&["--help"], dir.path()).status.code(), Some(0));
    let e = pschen(&["ps-count", "--gamma", "1.5", "--x", "100"], dir.path());
    assert_eq!(e.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&e.stderr).contains("gamma"));
}

#[test]
fn csv_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["bv", "--gamma", "0.95", "--x", "10000", "--D", "10", "--l", "2", "--csv"];
    let a = pschen(&args, dir.path());
    let b = pschen(&args, dir.path());
    let mut seq = args.to_vec();
    seq.push("--sequential");
    let c = pschen(&seq, dir.path());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("d,count_in_progression,expected,abs_dev\n1,"));
    assert!(text.lines().nth(1).unwrap().ends_with(",0.0"));
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = pschen(&["chen-weights", "--gamma", "0.95", "--x", "20000", "--csv"], dir.path());
    assert!(o.status.success());
    assert!(dir.path().join("spf-20000.bin").exists());
    let again = pschen(&["chen-weights", "--gamma", "0.95", "--x", "20000", "--csv"], dir.path());
    assert_eq!(o.stdout, again.stdout);
}

#[test]
fn config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg");
    std::fs::write(&cfg, "format = json\ndefault_tol = 1e-8\n").unwrap();
    let o = pschen(&["--config", cfg.to_str().unwrap(), "sievefn", "--kind", "f", "--s", "5"], dir.path());
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["inputs"]["tol"], 1e-8);
    std::fs::write(&cfg, "colour = red\n").unwrap();
    let o = pschen(&["--config", cfg.to_str().unwrap(), "pairs"], dir.path());
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn verify_all_subset() {
    let dir = tempfile::tempdir().unwrap();
    let o = pschen(&["verify-all", "--quick", "--only", "exponent_pairs,level_solver", "--json"], dir.path());
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["all_passed"], true);
    assert_eq!(v["result"]["outcomes"].as_array().unwrap().len(), 2);
    let o = pschen(&["verify-all", "--only", "nonsense"], dir.path());
    assert_eq!(o.status.code(), Some(64));
}
