use std::process::{Command, Output};

fn midbinom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_midbinom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn det_prints_value() {
    let o = midbinom(&["det", "--family", "mid", "--k", "2", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3\n");
}

#[test]
fn det_over_polynomials() {
    let o = midbinom(&["det", "--family", "b", "--k", "0", "--n", "2"]);
    assert_eq!(stdout(&o), "t\n");
}

#[test]
fn seq_family_b() {
    let o = midbinom(&["seq", "--family", "b", "--n-max", "3"]);
    assert_eq!(stdout(&o), "0 1\n1 1\n2 1+t\n3 1+2*t\n");
}

#[test]
fn seq_evaluated() {
    let o = midbinom(&["seq", "--family", "b", "--n-max", "3", "--t-eval", "-1/2"]);
    assert_eq!(stdout(&o), "0 1\n1 1\n2 1/2\n3 0\n");
}

#[test]
fn seq_shifted_bfile() {
    let o = midbinom(&["seq", "--family", "shift", "--r", "1", "--n-max", "4"]);
    assert_eq!(stdout(&o), "0 0\n1 1\n2 1\n3 3\n4 4\n");
}

#[test]
fn table_csv() {
    let o = midbinom(&["table", "--family", "shift1", "--k-max", "1", "--n-max", "5"]);
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("k,n=0,n=1,n=2,n=3,n=4,n=5"));
    assert_eq!(text.lines().nth(2), Some("1,1,1,2,1,1,0"));
}

#[test]
fn verify_theorem1_passes() {
    let o = midbinom(&["verify", "--id", "theorem1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"id\": \"theorem1\""));
}

#[test]
fn verify_known_failure_exits_one() {
    let o = midbinom(&["verify", "--id", "sec7/d4-formulas", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("id,kind,status"));
}

#[test]
fn audits_do_not_fail_the_run() {
    let o = midbinom(&["verify", "--id", "eq6-audit", "--id", "eq9-audit"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn report_rerenders_saved_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let path = path.to_str().unwrap();
    let o = midbinom(&["verify", "--id", "eq18", "--n-max", "4", "--out", path]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    let md = midbinom(&["report", "--in", path, "--format", "md"]);
    let text = stdout(&md);
    assert!(text.starts_with("# Verification report"));
    assert!(text.contains("| eq18/c | check | pass |"));
}

#[test]
fn usage_errors() {
    assert_eq!(midbinom(&[]).status.code(), Some(2));
    assert_eq!(midbinom(&["det", "--family", "nope", "--k", "0", "--n", "1"]).status.code(), Some(2));
    assert_eq!(midbinom(&["verify", "--id", "missing"]).status.code(), Some(2));
    assert_eq!(midbinom(&["report", "--in", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(midbinom(&["--help"]).status.code(), Some(0));
}
