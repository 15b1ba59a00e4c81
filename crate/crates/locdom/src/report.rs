//! Machine-readable run reports with stable field names.

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One named check: the `anchor` states the inequality or characterization
/// being verified, so reports map one-to-one onto the claims they test.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub anchor: String,
    pub status: Status,
    pub details: String,
}

impl CheckRecord {
    /// Pass when `violations` is empty; otherwise the first few violations
    /// become the details.
    pub fn from_violations(
        name: &str,
        anchor: &str,
        ok_details: String,
        violations: &[String],
    ) -> CheckRecord {
        if violations.is_empty() {
            CheckRecord {
                name: name.into(),
                anchor: anchor.into(),
                status: Status::Pass,
                details: ok_details,
            }
        } else {
            let shown: Vec<&String> = violations.iter().take(5).collect();
            CheckRecord {
                name: name.into(),
                anchor: anchor.into(),
                status: Status::Fail,
                details: format!(
                    "{} violation(s); first: {}",
                    violations.len(),
                    shown.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(" | ")
                ),
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub n: usize,
    pub m: usize,
    pub sha256: String,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputDigest>,
    pub checks: Vec<CheckRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn new(command: String) -> Report {
        Report { schema: SCHEMA_VERSION, command, input: None, checks: Vec::new(), timing_ms: None }
    }

    /// Records are kept sorted by name so report assembly is
    /// order-independent.
    pub fn finish(mut self) -> Report {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        self
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }
}
