use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_darboux-lab"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn construct_hermite() {
    let dir = TempDir::new().unwrap();
    let out = run(&["construct", "--family", "hermite", "--n", "1", "--beta", "0", "--gamma", "0", "--out", "c.json"], dir.path());
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("y' = (-1)*x*y + (1)*y^2 + (2)"), "{text}");
    assert!(text.contains("g = (-1)*x^2 + (1)*x*y + (1)"));
    assert!(text.contains("certificate: pass"));
    let doc = std::fs::read_to_string(dir.path().join("c.json")).unwrap();
    assert!(doc.contains("\"kind\": \"certificate\""));
    assert!(doc.contains("\"status\": \"pass\""));
}

#[test]
fn construct_literal_hermite_fails() {
    let dir = TempDir::new().unwrap();
    let out = run(&["construct", "--family", "hermite", "--n", "1", "--beta", "0", "--gamma", "0", "--literal"], dir.path());
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("residual: (2)*x"));
}

#[test]
fn verify_round_trip_and_perturbation() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let out = run(
        &["construct", "--family", "laguerre", "--A", "2", "--n", "4", "--beta", "-1/2", "--gamma", "1/3",
          "--system-out", "s.json", "--curve-out", "g.json", "--out", "c.json"],
        d,
    );
    assert_eq!(code(&out), 0);
    assert_eq!(code(&run(&["verify", "--system", "s.json", "--curve", "g.json"], d)), 0);
    assert_eq!(code(&run(&["verify", "--system", "c.json", "--curve", "c.json"], d)), 0);

    let curve = std::fs::read_to_string(d.join("g.json")).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&curve).unwrap();
    let g = doc["payload"]["g"].as_object().unwrap();
    let (key, value) = g.iter().next().unwrap();
    let bumped = format!("{}1", value.as_str().unwrap().split('/').next().unwrap());
    let mut doc2 = doc.clone();
    doc2["payload"]["g"][key] = serde_json::Value::String(bumped);
    std::fs::write(d.join("bad.json"), serde_json::to_string(&doc2).unwrap()).unwrap();
    let out = run(&["verify", "--system", "s.json", "--curve", "bad.json"], d);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("certificate: fail"));
    assert!(!text.contains("residual: 0\n"), "{text}");
}

#[test]
fn usage_and_input_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let out = run(&["construct", "--family", "hermite", "--n", "1", "--frobnicate"], d);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
    assert_eq!(code(&run(&["construct", "--family", "hyp", "--n", "2", "--b", "1", "--c", "3/0"], d)), 2);
    assert_eq!(code(&run(&["construct", "--family", "hermite", "--n", "0"], d)), 2);
    assert_eq!(code(&run(&["verify", "--system", "missing.json", "--curve", "missing.json"], d)), 2);
    std::fs::write(d.join("junk.json"), "{\"format_version\": 1, \"kind\": \"curve\", \"payload\": {\"g\": {\"1,x\": \"1\"}}}").unwrap();
    let out = run(&["verify", "--system", "junk.json", "--curve", "junk.json"], d);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));
    assert_eq!(code(&run(&["darboux", "--cll", "--a", "-4", "--b", "5/2", "--c", "1/3", "--mode", "exact"], d)), 2);
    assert_eq!(code(&run(&["nonsense"], d)), 2);
    assert_eq!(code(&run(&["--help"], d)), 0);
}

#[test]
fn audit_exit_codes() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let out = run(&["audit", "--family", "hyp", "--b", "5/2", "--c", "1/3", "--n-min", "1", "--n-max", "4"], d);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("coefficients agree"));
    let out = run(&["audit", "--family", "hermite", "--n-min", "1", "--n-max", "2", "--format", "json", "--out", "a.json"], d);
    assert_eq!(code(&out), 1);
    let text = std::fs::read_to_string(d.join("a.json")).unwrap();
    assert!(text.contains("\"kind\": \"audit\""));
}

#[test]
fn darboux_drift_levels_trajectory() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let cll = ["--cll", "--a", "-4", "--b", "5/2", "--c", "1/3"];
    let with = |cmd: &str, extra: &[&str]| {
        let mut v = vec![cmd];
        v.extend_from_slice(&cll);
        v.extend_from_slice(extra);
        run(&v, d)
    };
    let out = with("darboux", &["--out", "set.json"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("exponents (FirstIntegral): [-2/3, 0, 1, -1]"));

    let out = with("drift", &["--out", "drift"]);
    assert_eq!(code(&out), 0);
    assert!(d.join("drift/report.json").exists());
    let seed = std::fs::read_to_string(d.join("drift/seed_0.csv")).unwrap();
    assert!(seed.starts_with("t,x,y,F\n0,0.2,-1,"));

    assert_eq!(code(&with("drift", &["--variant", "v1"])), 1);
    assert_eq!(code(&with("drift", &["--variant", "both", "--tol", "1e-5"])), 0);

    assert_eq!(code(&with("levels", &["--nx", "4", "--ny", "3", "--out", "lv.csv"])), 0);
    let lv = std::fs::read_to_string(d.join("lv.csv")).unwrap();
    assert_eq!(lv.lines().count(), 13);
    assert!(lv.starts_with("x,y,f\n"));

    assert_eq!(code(&with("trajectory", &["--x0", "0.5", "--y0", "0", "--out", "t.csv"])), 0);
    assert!(std::fs::read_to_string(d.join("t.csv")).unwrap().starts_with("t,x,y\n0,0.5,0\n"));

    assert_eq!(code(&run(&["construct", "--family", "hermite", "--n", "2", "--system-out", "h.json"], d)), 0);
    assert_eq!(code(&run(&["trajectory", "--system", "h.json", "--x0", "0", "--y0", "0", "--T", "0.5", "--out", "h.csv"], d)), 0);
}

#[test]
fn outputs_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    for name in ["one", "two"] {
        let c = format!("{name}.json");
        let r = format!("{name}-drift");
        assert_eq!(code(&run(&["construct", "--family", "jacobi", "--A", "1/2", "--B", "0", "--n", "7", "--beta", "1", "--out", &c], d)), 0);
        assert_eq!(code(&run(&["drift", "--cll", "--a", "-2", "--b", "-3/2", "--c", "1/2", "--out", &r], d)), 0);
    }
    let read = |p: &str| std::fs::read(d.join(p)).unwrap();
    assert_eq!(read("one.json"), read("two.json"));
    assert_eq!(read("one-drift/report.json"), read("two-drift/report.json"));
    assert_eq!(read("one-drift/seed_5.csv"), read("two-drift/seed_5.csv"));
}

#[test]
fn sweep_small() {
    let dir = TempDir::new().unwrap();
    let out = run(&["sweep", "--n-max", "3"], dir.path());
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("36 of 36 members certified"));
}
