use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn corrkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_corrkit"))
        .args(args)
        .output()
        .expect("spawn corrkit")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_chu_to_stdout() {
    let o = corrkit(&["gen", "chu", "--n", "4", "--a", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "UNIMODULAR-PHASE 4 4\n0\n1\n4\n1\n");
}

#[test]
fn gen_chu_negative_a_is_canonicalized() {
    let o = corrkit(&["gen", "chu", "--n", "4", "--a", "-1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "UNIMODULAR-PHASE 4 4\n0\n7\n4\n7\n");
}

#[test]
fn gen_rs_order_zero() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("rs");
    let o = corrkit(&["gen", "rs", "--m", "0", "--out", path_str(&out)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let a = std::fs::read_to_string(dir.path().join("rs.a")).unwrap();
    let b = std::fs::read_to_string(dir.path().join("rs.b")).unwrap();
    assert_eq!(a, "UNIMODULAR-PHASE 1 1\n0\n");
    assert_eq!(b, a);
}

#[test]
fn gen_thm2_writes_both_halves() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p");
    let o = corrkit(&["gen", "thm2", "--n", "5", "--out", path_str(&out)]);
    assert!(o.status.success());
    let a = std::fs::read_to_string(dir.path().join("p.a")).unwrap();
    let b = std::fs::read_to_string(dir.path().join("p.b")).unwrap();
    let phases = |s: &str| -> Vec<u64> { s.lines().skip(1).map(|l| l.parse().unwrap()).collect() };
    assert!(a.starts_with("UNIMODULAR-PHASE 10 10\n"));
    let expect_a: Vec<u64> = (0..10u64).map(|j| 6 * j * j % 20).collect();
    let expect_b: Vec<u64> = (0..10u64).map(|j| 4 * j * j % 20).collect();
    assert_eq!(phases(&a), expect_a);
    assert_eq!(phases(&b), expect_b);
}

#[test]
fn gen_pair_requires_out() {
    let o = corrkit(&["gen", "thm1", "--n", "8"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gen_rejects_zero_length() {
    let o = corrkit(&["gen", "chu", "--n", "0", "--a", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn analyze_rudin_shapiro_json_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("rs");
    assert!(corrkit(&["gen", "rs", "--m", "2", "--out", path_str(&out)]).status.success());
    let a = dir.path().join("rs.a");
    let b = dir.path().join("rs.b");

    let o = corrkit(&["analyze", path_str(&a), path_str(&b), "--json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let f = |k: &str| v[k].as_f64().unwrap();
    assert!((f("adf_a") - 0.25).abs() < 1e-12);
    assert!((f("adf_b") - 0.25).abs() < 1e-12);
    assert!((f("cdf") - 0.75).abs() < 1e-12);
    assert!((f("psc") - 1.0).abs() < 1e-12);
    assert!(f("golay_defect") < 1e-12);

    let o = corrkit(&["analyze", path_str(&a), path_str(&b)]);
    assert!(o.status.success());
    let text = stdout(&o);
    let psc_line = text.lines().find(|l| l.starts_with("psc,")).unwrap();
    let psc: f64 = psc_line[4..].parse().unwrap();
    assert!((psc - 1.0).abs() < 1e-12);
}

#[test]
fn analyze_length_mismatch_fails() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    std::fs::write(&a, "UNIMODULAR-PHASE 1 2\n0\n1\n").unwrap();
    std::fs::write(&b, "UNIMODULAR-PHASE 1 3\n0\n1\n0\n").unwrap();
    let o = corrkit(&["analyze", path_str(&a), path_str(&b)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn analyze_missing_file_is_io_error() {
    let o = corrkit(&["analyze", "/nonexistent/a", "/nonexistent/b"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn analyze_rejects_malformed_input() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a");
    std::fs::write(&a, "UNIMODULAR-PHASE 4 3\n0\n1\n").unwrap();
    let o = corrkit(&["analyze", path_str(&a), path_str(&a)]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn generated_text_round_trips_through_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t");
    assert!(corrkit(&["gen", "thm1", "--n", "64", "--out", path_str(&out)]).status.success());
    let a = dir.path().join("t.a");
    let b = dir.path().join("t.b");
    let text = std::fs::read_to_string(&a).unwrap();
    let seq = corrkit::seqcore::parse_text(&text).unwrap();
    assert_eq!(corrkit::seqcore::write_text(&seq), text);

    let o = corrkit(&["analyze", path_str(&a), path_str(&b), "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let (x, y) = corrkit::generators::theorem1_pair(64).unwrap();
    let r = corrkit::seqcore::psc(&x, &y).unwrap();
    assert!((v["psc"].as_f64().unwrap() - r.psc).abs() < 1e-15);
}

#[test]
fn unknown_option_is_usage_error() {
    let o = corrkit(&["gen", "chu", "--n", "4", "--a", "1", "--bogus"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    let o = corrkit(&["gen", "rs", "--m", "2", "--a", "1", "--out", "/tmp/x"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gauss_json_matches_library() {
    let o = corrkit(&["gauss", "--N", "100", "--x", "0.25", "--theta", "0.1", "--decompose"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let p = corrkit::gauss::GaussParams::new(100, 0.25, 0.1);
    let direct = corrkit::gauss::gauss_sum_direct(&p);
    assert!((v["direct"]["re"].as_f64().unwrap() - direct.re).abs() < 1e-15);
    assert!((v["total"]["im"].as_f64().unwrap() - direct.im).abs() < 1e-9 * 100.0);
    assert!(v["remainder_abs"].as_f64().unwrap() < 0.25);

    let o = corrkit(&["gauss", "--N", "10", "--x", "0.5", "--theta", "-0.2"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["total"]["re"].is_f64());
}

#[test]
fn gauss_decompose_domain_error() {
    let o = corrkit(&["gauss", "--N", "10", "--x", "1.5", "--theta", "0.1", "--decompose"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn study_prints_csv() {
    let o = corrkit(&["study", "eq2", "--grid", "64,256"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(corrkit::experiments::CSV_HEADER));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].starts_with("64,sqrt_n_adf_chu1,"));
}

#[test]
fn verify_lemma21_passes() {
    let o = corrkit(&["verify", "lemma21"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("suite,check,status,worst,tolerance\n"));
    assert!(text.lines().skip(1).all(|l| l.contains(",pass,")));
}

#[test]
fn thread_count_env_is_validated() {
    let o = Command::new(env!("CARGO_BIN_EXE_corrkit"))
        .args(["gen", "chu", "--n", "2", "--a", "1"])
        .env("CORRKIT_THREADS", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_corrkit"))
        .args(["gen", "chu", "--n", "2", "--a", "1"])
        .env("CORRKIT_THREADS", "2")
        .output()
        .unwrap();
    assert!(o.status.success());
}
