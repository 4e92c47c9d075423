use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

/// One named verification carried in every command's output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Machine-readable result of a command run. Field order is stable, and
/// key order inside `inputs`/`result` follows insertion, so a parsed
/// envelope re-renders byte for byte.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputEnvelope {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub result: Value,
    pub checks: Vec<Check>,
}

impl OutputEnvelope {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("envelope serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

/// An envelope plus the human-readable lines that precede the check list.
#[derive(Clone, Debug)]
pub struct Report {
    pub envelope: OutputEnvelope,
    pub lines: Vec<String>,
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            out.push_str(line);
            out.push('\n');
        }
        for c in &self.envelope.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("[{tag}] {}: {}\n", c.name, c.detail));
        }
        out.push_str(&format!(
            "checks: {}/{} passed\n",
            self.envelope.passed_count(),
            self.envelope.checks.len()
        ));
        out
    }
}
