//! Verification reports: named checks with status, witness and timing.

use std::fmt;
use std::time::Instant;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok { Status::Pass } else { Status::Fail }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// Ordered `key=value` parameters, serialized as a JSON object.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params(pub Vec<(String, String)>);

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            match v.parse::<i64>() {
                Ok(n) => map.serialize_entry(k, &n)?,
                Err(_) => map.serialize_entry(k, v)?,
            }
        }
        map.end()
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportEntry {
    pub check: String,
    pub params: Params,
    pub status: Status,
    pub witness: String,
    pub elapsed_ms: f64,
}

impl ReportEntry {
    /// Entry timed from `start` until now.
    pub fn new(check: impl Into<String>, status: Status, witness: impl Into<String>, start: Instant) -> Self {
        ReportEntry {
            check: check.into(),
            params: Params::default(),
            status,
            witness: witness.into(),
            elapsed_ms: (start.elapsed().as_secs_f64() * 1e6).round() / 1e3,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.0.push((key.to_string(), value.to_string()));
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report entries serialize")
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct VerificationReport {
    pub entries: Vec<ReportEntry>,
}

impl VerificationReport {
    pub fn new() -> Self {
        VerificationReport::default()
    }

    pub fn push(&mut self, entry: ReportEntry) {
        self.entries.push(entry);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.entries.extend(other.entries);
    }

    /// Pass iff every non-skipped entry passes. An empty report passes.
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> + '_ {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    /// One JSON object per line.
    pub fn to_json_lines(&self) -> String {
        self.entries.iter().map(|e| e.to_json() + "\n").collect()
    }

    /// Entries with timings zeroed, for run-to-run comparison.
    pub fn without_timings(&self) -> VerificationReport {
        let mut r = self.clone();
        for e in &mut r.entries {
            e.elapsed_ms = 0.0;
        }
        r
    }

    pub fn to_table(&self) -> String {
        let width = self.entries.iter().map(|e| e.check.len()).max().unwrap_or(5).max(5);
        let mut out = format!("{:<width$}  {:<7}  {:>10}  params / witness\n", "check", "status", "ms");
        for e in &self.entries {
            out.push_str(&format!(
                "{:<width$}  {:<7}  {:>10.3}  {} | {}\n",
                e.check,
                e.status.to_string(),
                e.elapsed_ms,
                e.params,
                e.witness
            ));
        }
        out.push_str(&format!(
            "overall: {} ({} pass, {} fail, {} skipped)\n",
            if self.passed() { "PASS" } else { "FAIL" },
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped)
        ));
        out
    }
}
