use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    /// A proved statement failed on certified premises.
    Violation,
    NotApplicable,
    Inconclusive,
    Info,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub status: Status,
    pub data: Value,
}

impl CheckReport {
    pub fn new(name: &str, status: Status, data: Value) -> Self {
        Self { name: name.to_string(), status, data }
    }

    pub fn pass_if(name: &str, ok: bool, data: Value) -> Self {
        Self::new(name, if ok { Status::Pass } else { Status::Fail }, data)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceHeader {
    pub complex_hash: String,
    pub sigma: Vec<u32>,
    pub q: usize,
    pub d: usize,
    pub p1: usize,
    pub p2: usize,
    pub prime: u32,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceReport {
    pub instance: InstanceHeader,
    pub checks: Vec<CheckReport>,
}

impl InstanceReport {
    pub fn has_violation(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Violation)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
