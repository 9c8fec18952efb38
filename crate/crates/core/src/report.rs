//! Pass/fail records shared by the verification routines and the CLI.

use serde::Serialize;
use serde_json::Value;

/// Outcome of one identity or property check.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Check {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool) -> Self {
        Self {
            name: name.into(),
            order: None,
            pass,
            first_mismatch: None,
            detail: None,
        }
    }

    pub fn with_order(mut self, n: usize) -> Self {
        self.order = Some(n);
        self
    }

    pub fn mismatch(mut self, m: Option<String>) -> Self {
        self.pass = self.pass && m.is_none();
        self.first_mismatch = m;
        self
    }

    pub fn with_detail(mut self, v: Value) -> Self {
        self.detail = Some(v);
        self
    }
}

/// A list of checks.
#[derive(Debug, Clone, Default, Serialize, PartialEq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}
