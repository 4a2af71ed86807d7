//! Run reports. Mathematical content and timings live in separate blocks
//! so that reports from two runs differ only in `timings`.

use hfk_core::invariants::{chi_consistency, CheckResult, HFKReport};
use serde::{Deserialize, Serialize};

use crate::corpus::Expected;
use crate::error::ErrorRecord;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub max_grid: usize,
    pub max_crossings: usize,
    pub threads: usize,
    pub enforce_expected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryRecord {
    pub id: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<HFKReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorRecord>,
    /// Comparisons against the corpus's expected block.
    #[serde(default)]
    pub expected_checks: Vec<CheckResult>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub entries: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
    pub checks_passed: usize,
    pub checks_failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryTiming {
    pub id: String,
    pub wall_us: u64,
    pub grid_size: Option<usize>,
    pub generator_count: Option<u64>,
    #[serde(default)]
    pub cached: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub total_us: u64,
    pub entries: Vec<EntryTiming>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub tool: String,
    pub version: String,
    pub config: ConfigEcho,
    pub entries: Vec<EntryRecord>,
    pub summary: Summary,
    pub timings: Timings,
}

impl RunReport {
    pub fn new(config: ConfigEcho, entries: Vec<EntryRecord>, timings: Timings) -> Self {
        let summary = summarize(&entries);
        Self {
            schema_version: SCHEMA_VERSION,
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            entries,
            summary,
            timings,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0 && self.summary.errors == 0
    }

    /// Same report with the timing block cleared.
    pub fn without_timings(&self) -> Self {
        Self {
            timings: Timings::default(),
            ..self.clone()
        }
    }

    /// Exit code: 0 when everything passed, otherwise the most severe
    /// error class seen, and 1 for plain check failures.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            return 0;
        }
        self.entries
            .iter()
            .filter_map(|e| e.error.as_ref().map(|r| r.exit_code))
            .max()
            .unwrap_or(1)
            .max(1)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

fn summarize(entries: &[EntryRecord]) -> Summary {
    let mut s = Summary {
        entries: entries.len(),
        ..Summary::default()
    };
    for e in entries {
        if e.error.is_some() {
            s.errors += 1;
        } else if e.passed {
            s.passed += 1;
        } else {
            s.failed += 1;
        }
        let diag = e.report.iter().flat_map(|r| r.diagnostics.iter());
        for c in diag.chain(e.expected_checks.iter()) {
            if c.passed {
                s.checks_passed += 1;
            } else {
                s.checks_failed += 1;
            }
        }
    }
    s
}

/// Compares a report with expected values. A missing expected block is a
/// failure only when `enforce` is set.
pub fn expected_checks(
    report: &HFKReport,
    expected: Option<&Expected>,
    enforce: bool,
) -> Vec<CheckResult> {
    let Some(x) = expected else {
        return if enforce {
            vec![CheckResult::fail("expected_present", "no expected block")]
        } else {
            Vec::new()
        };
    };
    let mut out = Vec::new();
    if let Some(g) = x.genus {
        out.push(CheckResult::from_bool(
            "expected_genus",
            report.genus == Some(g),
            format!("computed {:?}, expected {g}", report.genus),
        ));
    }
    if let Some(delta) = x.delta_poly() {
        match &report.hat_ranks {
            Some(h) => out.push(chi_consistency(h, &delta)),
            None => out.push(CheckResult::from_bool(
                "expected_delta",
                report.delta == delta,
                format!("computed {}, expected {delta}", report.delta),
            )),
        }
    }
    if let Some(hat) = x.hat() {
        out.push(CheckResult::from_bool(
            "expected_hat_ranks",
            report.hat_ranks.as_ref() == Some(&hat),
            "bigraded ranks".to_string(),
        ));
    }
    out
}
