//! Structured verification results and the report document.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// How many failing witnesses a single report keeps verbatim.
pub const WITNESS_LIMIT: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

/// `Check` asserts a claim; `Audit` records findings about a display
/// suspected to be misprinted and never fails a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Check,
    Audit,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    pub kind: Kind,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
}

/// Accumulates case results and produces a [`CheckReport`].
#[derive(Debug, Clone)]
pub struct Recorder {
    id: String,
    kind: Kind,
    params: BTreeMap<String, Value>,
    witnesses: Vec<Witness>,
    notes: Vec<String>,
    passed: usize,
    failed: usize,
    skipped: usize,
}

impl Recorder {
    pub fn new(id: impl Into<String>) -> Self {
        Recorder {
            id: id.into(),
            kind: Kind::Check,
            params: BTreeMap::new(),
            witnesses: Vec::new(),
            notes: Vec::new(),
            passed: 0,
            failed: 0,
            skipped: 0,
        }
    }

    pub fn audit(id: impl Into<String>) -> Self {
        Recorder { kind: Kind::Audit, ..Self::new(id) }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn set_param(&mut self, key: &str, value: impl Into<Value>) {
        self.params.insert(key.to_string(), value.into());
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn pass(&mut self) {
        self.passed += 1;
    }

    pub fn fail(&mut self, input: impl Display, expected: impl Display, actual: impl Display) {
        self.failed += 1;
        if self.witnesses.len() < WITNESS_LIMIT {
            self.witnesses.push(Witness {
                input: input.to_string(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    /// Record one comparison; returns whether it matched.
    pub fn expect_eq<T: PartialEq + Display>(&mut self, input: impl Display, expected: &T, actual: &T) -> bool {
        if expected == actual {
            self.pass();
            true
        } else {
            self.fail(input, expected, actual);
            false
        }
    }

    /// Record a boolean property; `detail` describes the failing value.
    pub fn expect(&mut self, input: impl Display, ok: bool, claim: &str, detail: impl Display) -> bool {
        if ok {
            self.pass();
        } else {
            self.fail(input, claim, detail);
        }
        ok
    }

    /// A case whose precondition is unmet; `reason` is kept once per distinct text.
    pub fn skip(&mut self, reason: impl Into<String>) {
        self.skipped += 1;
        let reason = reason.into();
        if !self.notes.contains(&reason) {
            self.notes.push(reason);
        }
    }

    pub fn failed(&self) -> usize {
        self.failed
    }

    /// Fold another recorder's outcomes into this one.
    pub fn absorb(&mut self, other: Recorder) {
        self.passed += other.passed;
        self.failed += other.failed;
        self.skipped += other.skipped;
        for w in other.witnesses {
            if self.witnesses.len() < WITNESS_LIMIT {
                self.witnesses.push(w);
            }
        }
        for n in other.notes {
            if !self.notes.contains(&n) {
                self.notes.push(n);
            }
        }
    }

    pub fn finish(mut self) -> CheckReport {
        let status = if self.failed > 0 {
            Status::Fail
        } else if self.passed == 0 {
            Status::Inconclusive
        } else {
            Status::Pass
        };
        if status == Status::Inconclusive && self.notes.is_empty() {
            self.notes.push("no case was applicable".into());
        }
        if self.failed > self.witnesses.len() {
            self.notes.push(format!(
                "{} failing cases, first {} shown",
                self.failed,
                self.witnesses.len()
            ));
        }
        self.params.insert(
            "cases".into(),
            serde_json::json!({"passed": self.passed, "failed": self.failed, "skipped": self.skipped}),
        );
        CheckReport {
            id: self.id,
            kind: self.kind,
            params: self.params,
            status,
            witnesses: self.witnesses,
            notes: self.notes,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

/// Run metadata; excluded from payload comparisons.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Header {
    pub generated_at: String,
    pub config: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub header: Header,
    pub checks: Vec<CheckReport>,
    pub summary: Summary,
}

impl Report {
    pub fn new(header: Header, checks: Vec<CheckReport>) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Inconclusive => summary.inconclusive += 1,
            }
        }
        Report { header, checks, summary }
    }

    /// Checks (not audits) that failed.
    pub fn failing_checks(&self) -> Vec<&CheckReport> {
        self.checks
            .iter()
            .filter(|c| c.kind == Kind::Check && c.status == Status::Fail)
            .collect()
    }

    /// The comparable body: everything except the header, as canonical JSON.
    pub fn payload_json(&self) -> String {
        serde_json::to_string_pretty(&serde_json::json!({
            "checks": self.checks,
            "summary": self.summary,
        }))
        .expect("report serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::from("# Verification report\n\n");
        out.push_str(&format!(
            "pass {} / fail {} / inconclusive {}\n\n",
            self.summary.pass, self.summary.fail, self.summary.inconclusive
        ));
        out.push_str("| id | kind | status | cases | notes |\n|---|---|---|---|---|\n");
        for c in &self.checks {
            let cases = c.params.get("cases").map(|v| v.to_string()).unwrap_or_default();
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} |\n",
                c.id,
                kind_str(c.kind),
                status_str(c.status),
                cases.replace('|', "/"),
                c.notes.join("; ").replace('|', "/")
            ));
        }
        for c in self.checks.iter().filter(|c| !c.witnesses.is_empty()) {
            out.push_str(&format!("\n## {}\n\n| input | expected | actual |\n|---|---|---|\n", c.id));
            for w in &c.witnesses {
                out.push_str(&format!("| {} | {} | {} |\n", w.input, w.expected, w.actual));
            }
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,kind,status,witnesses,notes\n");
        for c in &self.checks {
            out.push_str(&format!(
                "{},{},{},{},\"{}\"\n",
                c.id,
                kind_str(c.kind),
                status_str(c.status),
                c.witnesses.len(),
                c.notes.join("; ").replace('"', "'")
            ));
        }
        out
    }
}

pub fn status_str(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Inconclusive => "inconclusive",
    }
}

fn kind_str(k: Kind) -> &'static str {
    match k {
        Kind::Check => "check",
        Kind::Audit => "audit",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_rules() {
        let mut r = Recorder::new("x");
        r.pass();
        assert_eq!(r.finish().status, Status::Pass);

        let mut r = Recorder::new("x");
        r.pass();
        r.fail("n=1", "1", "2");
        let rep = r.finish();
        assert_eq!(rep.status, Status::Fail);
        assert_eq!(rep.witnesses.len(), 1);

        let mut r = Recorder::new("x");
        r.skip("windows overlap");
        let rep = r.finish();
        assert_eq!(rep.status, Status::Inconclusive);
        assert_eq!(rep.notes, vec!["windows overlap".to_string()]);
    }

    #[test]
    fn json_roundtrip() {
        let mut r = Recorder::new("demo").param("n_max", 3);
        r.fail("n=2", "1+t", "1");
        let rep = Report::new(
            Header { generated_at: "now".into(), config: Value::Null },
            vec![r.finish()],
        );
        let back = Report::from_json(&rep.to_json()).unwrap();
        assert_eq!(back, rep);
        assert_eq!(back.summary.fail, 1);
        assert!(rep.payload_json().contains("\"status\": \"fail\""));
    }
}
