//! Structured results for the identity-verification suites.

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

/// One verification suite: a named list of checks with a wall-clock time.
/// A suite passes iff every non-skip check passes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            checks: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn record(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: detail.into(),
        });
    }

    pub fn skip(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            status: CheckStatus::Skip,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks
            .iter()
            .all(|c| c.status != CheckStatus::Fail)
    }

    /// Fold another suite into this one, prefixing check names with the
    /// absorbed suite's name.
    pub fn absorb(&mut self, other: CheckReport) {
        for c in other.checks {
            self.checks.push(Check {
                name: format!("{}/{}", other.suite, c.name),
                status: c.status,
                detail: c.detail,
            });
        }
        self.elapsed_ms += other.elapsed_ms;
    }
}

/// Runs `body` against a fresh report and fills in the elapsed time.
pub fn timed_suite(name: &str, body: impl FnOnce(&mut CheckReport)) -> CheckReport {
    let start = Instant::now();
    let mut report = CheckReport::new(name);
    body(&mut report);
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "pass"),
            CheckStatus::Fail => write!(f, "fail"),
            CheckStatus::Skip => write!(f, "skip"),
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} ({} ms)", self.suite, self.elapsed_ms)?;
        for c in &self.checks {
            if c.detail.is_empty() {
                writeln!(f, "  [{}] {}", c.status, c.name)?;
            } else {
                writeln!(f, "  [{}] {}: {}", c.status, c.name, c.detail)?;
            }
        }
        write!(
            f,
            "  => {}",
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}
