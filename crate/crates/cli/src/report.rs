use std::fmt::Write as _;

use serde::Serialize;

pub const SCHEMA_ID: &str = "sphorb.report.v1";

#[derive(Clone, Debug, Serialize)]
pub struct Parameters {
    pub n_min: usize,
    pub n_max: usize,
    pub k: Option<usize>,
    pub epsilon: Option<i8>,
    pub seed: u64,
    pub rmax: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    #[serde(skip)]
    pub order: Vec<i64>,
    pub key: String,
    pub passed: bool,
    pub detail: Vec<String>,
}

impl CaseResult {
    pub fn new(order: Vec<i64>, key: impl Into<String>, passed: bool, detail: Vec<String>) -> Self {
        CaseResult {
            order,
            key: key.into(),
            passed,
            detail,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: &'static str,
    pub suite: String,
    pub parameters: Parameters,
    pub status: &'static str,
    pub summary: Summary,
    pub skipped: Vec<String>,
    pub cases: Vec<CaseResult>,
}

impl VerificationReport {
    /// Sorts cases so the output does not depend on worker scheduling.
    pub fn new(
        suite: &str,
        parameters: Parameters,
        mut cases: Vec<CaseResult>,
        mut skipped: Vec<String>,
    ) -> Self {
        cases.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.key.cmp(&b.key)));
        skipped.sort();
        let passed = cases.iter().filter(|c| c.passed).count();
        let failed = cases.len() - passed;
        VerificationReport {
            schema: SCHEMA_ID,
            suite: suite.to_string(),
            parameters,
            status: if failed == 0 { "pass" } else { "fail" },
            summary: Summary {
                cases: cases.len(),
                passed,
                failed,
            },
            skipped,
            cases,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let p = &self.parameters;
        let _ = writeln!(
            out,
            "suite {}: {} ({}/{} cases pass, n {}..={})",
            self.suite,
            self.status.to_uppercase(),
            self.summary.passed,
            self.summary.cases,
            p.n_min,
            p.n_max
        );
        for c in &self.cases {
            let _ = writeln!(out, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.key);
            if !c.passed {
                for line in &c.detail {
                    let _ = writeln!(out, "    {line}");
                }
            }
        }
        for s in &self.skipped {
            let _ = writeln!(out, "SKIP {s}");
        }
        out
    }
}
