//! Machine-readable summaries of CLI runs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    pub n: Option<usize>,
    pub weights: Option<Vec<u64>>,
    pub q: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: Parameters,
    pub checks: Vec<Check>,
    /// Named counts; values are decimal strings so big integers survive.
    pub counts: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub data: Option<serde_json::Value>,
    pub elapsed_ms: u64,
}

impl RunReport {
    pub fn new(command: impl Into<String>, parameters: Parameters) -> RunReport {
        RunReport {
            command: command.into(),
            parameters,
            ..RunReport::default()
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn count(&mut self, name: impl Into<String>, value: impl ToString) {
        self.counts.insert(name.into(), value.to_string());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}
