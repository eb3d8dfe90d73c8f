use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Unknown,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Unknown => "UNKNOWN",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Params {
    pub p: u64,
    pub n: u32,
    pub group: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub indices: Vec<u32>,
}

impl Params {
    pub fn text(&self) -> String {
        let mut s = format!("p={} n={} group={}", self.p, self.n, self.group);
        if !self.indices.is_empty() {
            let idx: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
            let _ = write!(s, " idx={}", idx.join(","));
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check: String,
    /// The statement being checked.
    pub claim: String,
    pub params: Params,
    pub status: Status,
    pub witness: String,
    /// Module files of the first counterexample.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<serde_json::Value>,
    #[serde(skip)]
    pub wall: Duration,
}

impl CheckReport {
    /// One JSON object per line, without timings.
    pub fn machine_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn text_line(&self, timings: bool) -> String {
        let mut s = format!(
            "{:7} {} [{}] {}",
            self.status.label(),
            self.check,
            self.params.text(),
            self.witness
        );
        if timings {
            let _ = write!(s, " ({} ms)", self.wall.as_millis());
        }
        s
    }
}
