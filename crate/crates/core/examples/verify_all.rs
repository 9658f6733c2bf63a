//! Run every registered check at its default range and print a summary line per report.

use std::time::Instant;

use midbinom::harness::{run_checks, Limits};
use midbinom::report::{status_str, Kind};

fn main() {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let start = Instant::now();
    let reports = run_checks(&[], &Limits::default(), jobs);
    for r in &reports {
        let kind = if r.kind == Kind::Audit { " (audit)" } else { "" };
        println!("{:<24} {}{kind}", r.id, status_str(r.status));
    }
    println!("{} reports in {:.1?}", reports.len(), start.elapsed());
}
