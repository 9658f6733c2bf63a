//! Acceptance suite: one line per criterion. Criteria 9 and 10 contain
//! printed identities that the determinants contradict; they are reported
//! as FAIL and the process succeeds only when the failing set is exactly
//! those reports.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use midbinom::harness::{run_checks, Limits};
use midbinom::report::{CheckReport, Kind, Report, Status};

/// Reports known to fail: printed identities contradicted by the determinants.
const KNOWN_FAILURES: [&str; 4] = ["sec6", "checkerboard", "sec7/d4-formulas", "sec7/power-values"];

struct Outcome {
    ok: bool,
    detail: String,
}

type Criterion = fn() -> (Vec<CheckReport>, Outcome);

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn run(ids: &[&str], limits: Limits) -> Vec<CheckReport> {
    let ids: Vec<String> = ids.iter().map(|s| s.to_string()).collect();
    let reports = run_checks(&ids, &limits, jobs());
    assert!(!reports.is_empty(), "no report for {ids:?}");
    reports
}

fn limits(k: Option<usize>, n: Option<usize>, order: Option<usize>) -> Limits {
    Limits { k_max: k, n_max: n, order, ..Limits::default() }
}

/// Pass iff every check (not audit) passed and the run stayed under `budget`.
fn judge(reports: &[CheckReport], elapsed: Duration, budget: Option<Duration>) -> Outcome {
    let failing: Vec<&str> = reports
        .iter()
        .filter(|r| r.kind == Kind::Check && r.status != Status::Pass)
        .map(|r| r.id.as_str())
        .collect();
    let slow = budget.is_some_and(|b| elapsed > b);
    let mut detail = format!(
        "{} reports in {:.1}s",
        reports.len(),
        elapsed.as_secs_f64()
    );
    if !failing.is_empty() {
        detail.push_str(&format!("; failing: {}", failing.join(", ")));
    }
    if slow {
        detail.push_str(&format!("; over budget {:?}", budget.unwrap()));
    }
    Outcome { ok: failing.is_empty() && !slow, detail }
}

fn timed(f: impl FnOnce() -> Vec<CheckReport>) -> (Vec<CheckReport>, Duration) {
    let start = Instant::now();
    let r = f();
    (r, start.elapsed())
}

fn criterion_1() -> (Vec<CheckReport>, Outcome) {
    let (r, t) = timed(|| run(&["theorem1"], limits(Some(8), Some(12), None)));
    let o = judge(&r, t, Some(Duration::from_secs(30)));
    (r, o)
}

fn criterion_2() -> (Vec<CheckReport>, Outcome) {
    let (r, t) = timed(|| run(&["base-determinants", "eq18"], limits(None, Some(12), None)));
    let o = judge(&r, t, None);
    (r, o)
}

fn criterion_3() -> (Vec<CheckReport>, Outcome) {
    let (r, t) = timed(|| run(&["oracles"], limits(None, Some(12), None)));
    let o = judge(&r, t, None);
    (r, o)
}

fn criterion_4() -> (Vec<CheckReport>, Outcome) {
    let (mut r, t1) = timed(|| run(&["a-polys"], limits(Some(7), None, Some(60))));
    let (r2, t2) = timed(|| run(&["theorem6"], limits(Some(3), None, Some(40))));
    r.extend(r2);
    let o = judge(&r, t1 + t2, None);
    (r, o)
}

fn criterion_5() -> (Vec<CheckReport>, Outcome) {
    let (mut r, t1) = timed(|| run(&["prop3", "theorem4"], limits(Some(4), None, Some(60))));
    let (r2, t2) = timed(|| run(&["syt-descent"], limits(None, Some(12), Some(60))));
    r.extend(r2);
    let o = judge(&r, t1 + t2, None);
    (r, o)
}

fn criterion_6() -> (Vec<CheckReport>, Outcome) {
    let (mut r, t1) = timed(|| run(&["eq8-series"], limits(None, None, Some(24))));
    let (r2, t2) = timed(|| run(&["catalan-at-minus-one"], limits(None, Some(10), None)));
    let (r3, t3) = timed(|| run(&["eq6-audit", "eq9-audit"], limits(None, None, Some(12))));
    r.extend(r2);
    let findings = r3.iter().all(|a| a.kind == Kind::Audit && !a.witnesses.is_empty());
    r.extend(r3);
    let mut o = judge(&r, t1 + t2 + t3, None);
    if !findings {
        o.ok = false;
        o.detail.push_str("; an audit recorded no finding");
    }
    (r, o)
}

fn criterion_7() -> (Vec<CheckReport>, Outcome) {
    let (mut r, t1) = timed(|| run(&["sec4-closed-forms", "d3-closed-audit"], limits(None, Some(10), None)));
    let (r2, t2) = timed(|| run(&["conj8-9"], limits(Some(3), Some(10), None)));
    let (r3, t3) = timed(|| run(&["conj10-11", "cor12-audit"], limits(Some(2), None, Some(30))));
    r.extend(r2);
    r.extend(r3);
    let o = judge(&r, t1 + t2 + t3, Some(Duration::from_secs(300)));
    (r, o)
}

fn criterion_8() -> (Vec<CheckReport>, Outcome) {
    let (r, t) = timed(|| run(&["sec5"], limits(Some(2), Some(10), Some(30))));
    let o = judge(&r, t, None);
    (r, o)
}

fn criterion_9() -> (Vec<CheckReport>, Outcome) {
    let (mut r, t1) = timed(|| run(&["sec6", "sec6-symmetry-audit"], limits(Some(2), Some(10), Some(30))));
    let (r2, t2) = timed(|| run(&["checkerboard"], limits(Some(3), Some(4), None)));
    r.extend(r2);
    let o = judge(&r, t1 + t2, None);
    (r, o)
}

fn criterion_10() -> (Vec<CheckReport>, Outcome) {
    let l = Limits { r_max: Some(4), k_max: Some(4), periods: Some(2), ..Limits::default() };
    let (r, t) = timed(|| run(&["sec7"], l));
    let o = judge(&r, t, Some(Duration::from_secs(600)));
    (r, o)
}

fn payload(jobs: usize, dir: &std::path::Path) -> Result<String, String> {
    let out = dir.join(format!("jobs{jobs}.json"));
    let args = [
        "midbinom".to_string(),
        "verify".into(),
        "--jobs".into(),
        jobs.to_string(),
        "--out".into(),
        out.display().to_string(),
    ];
    let code = midbinom::cli::run(args);
    if code == 2 {
        return Err(format!("verify --jobs {jobs} exited with usage error"));
    }
    let text = std::fs::read_to_string(&out).map_err(|e| e.to_string())?;
    let report = Report::from_json(&text).map_err(|e| e.to_string())?;
    Ok(report.payload_json())
}

fn criterion_11() -> (Vec<CheckReport>, Outcome) {
    let dir = tempfile::tempdir().expect("temp dir");
    let start = Instant::now();
    let outcome = match (payload(1, dir.path()), payload(8, dir.path())) {
        (Ok(a), Ok(b)) => Outcome {
            ok: a == b,
            detail: format!(
                "payloads of {} bytes {} in {:.1}s",
                a.len(),
                if a == b { "identical" } else { "differ" },
                start.elapsed().as_secs_f64()
            ),
        },
        (Err(e), _) | (_, Err(e)) => Outcome { ok: false, detail: e },
    };
    (Vec::new(), outcome)
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 11] = [
        ("signed D_k(n) = r_k(n) for k <= 8, n <= 12", criterion_1),
        ("base determinants, n <= 12", criterion_2),
        ("oracle equivalence", criterion_3),
        ("generating-function closed forms", criterion_4),
        ("operator apparatus", criterion_5),
        ("series, Catalan values, audits", criterion_6),
        ("d_k closed forms, blocks and generating functions", criterion_7),
        ("rho_k and delta_k generating functions", criterion_8),
        ("bold d_k structure and Catalan checkerboards", criterion_9),
        ("shifted families", criterion_10),
        ("determinism across --jobs", criterion_11),
    ];
    let mut failing_reports = BTreeSet::new();
    let mut failed_criteria = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let (reports, outcome) = f();
        for r in reports.iter().filter(|r| r.kind == Kind::Check && r.status != Status::Pass) {
            failing_reports.insert(r.id.clone());
        }
        let mark = if outcome.ok { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {mark} {name}: {}", i + 1, outcome.detail);
        if !outcome.ok {
            failed_criteria.push(i + 1);
        }
    }
    let known: BTreeSet<String> = KNOWN_FAILURES.iter().map(|s| s.to_string()).collect();
    let expected_criteria = [9, 10];
    println!(
        "failed criteria: {failed_criteria:?} (expected {expected_criteria:?}, see the decisions ledger)"
    );
    if failing_reports == known && failed_criteria == expected_criteria {
        ExitCode::SUCCESS
    } else {
        println!("unexpected outcome: failing reports {failing_reports:?}, known {known:?}");
        ExitCode::FAILURE
    }
}
