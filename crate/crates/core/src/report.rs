//! Results of identity checks, shared by the verification suites and the CLI.

use std::time::Instant;

use serde::Serialize;

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedSlow,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    /// The formula being checked, written out.
    pub anchor: String,
    pub status: Status,
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Both sides (on failure) or a witness value.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_witness(mut self, w: serde_json::Value) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn skipped(id: &str, anchor: &str) -> Self {
        CheckResult {
            id: id.into(),
            anchor: anchor.into(),
            status: Status::SkippedSlow,
            elapsed_ms: 0.0,
            note: None,
            witness: None,
        }
    }
}

/// Run `f`, timing it. `Ok(None)` is a pass, `Ok(Some(w))` a failure with
/// witness `w`, and `Err` a failure carrying the error text.
pub fn run_check<F>(id: &str, anchor: &str, f: F) -> CheckResult
where
    F: FnOnce() -> Result<Option<serde_json::Value>>,
{
    let t = Instant::now();
    let r = f();
    let elapsed_ms = t.elapsed().as_secs_f64() * 1e3;
    let (status, witness) = match r {
        Ok(None) => (Status::Pass, None),
        Ok(Some(w)) => (Status::Fail, Some(w)),
        Err(e) => (Status::Fail, Some(serde_json::json!({ "error": e.to_string() }))),
    };
    CheckResult { id: id.into(), anchor: anchor.into(), status, elapsed_ms, note: None, witness }
}

/// Helper for equality checks: `None` when equal, otherwise both sides.
pub fn compare<T: PartialEq + std::fmt::Display>(lhs: &T, rhs: &T) -> Option<serde_json::Value> {
    if lhs == rhs {
        None
    } else {
        Some(serde_json::json!({ "lhs": lhs.to_string(), "rhs": rhs.to_string() }))
    }
}

/// All checks of one suite.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub elapsed_ms: f64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed())
    }
}
