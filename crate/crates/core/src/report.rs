//! Machine-readable verification reports.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::determinants::Verdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub braiding: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    pub witness: Option<String>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(check: &str, braiding: &str) -> Self {
        Self {
            check: check.into(),
            braiding: braiding.into(),
            params: BTreeMap::new(),
            status: Status::Skipped,
            witness: None,
            elapsed_ms: 0,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.into(), value.into());
        self
    }

    pub fn skipped(mut self, reason: &str) -> Self {
        self.status = Status::Skipped;
        self.params.insert("skip_reason".into(), reason.into());
        self
    }

    pub fn with_verdict(mut self, v: Verdict, started: Instant) -> Self {
        self.status = if v.pass { Status::Pass } else { Status::Fail };
        self.witness = v.witness;
        self.elapsed_ms = started.elapsed().as_millis() as u64;
        self
    }

    /// One human-readable line.
    pub fn line(&self) -> String {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                other => format!("{k}={other}"),
            })
            .collect();
        let mut s =
            format!("{} {} [{}] {} ({} ms)", self.status, self.check, self.braiding, params.join(" "), self.elapsed_ms);
        if let Some(w) = &self.witness {
            s.push_str(&format!("\n    witness: {w}"));
        }
        s
    }
}
