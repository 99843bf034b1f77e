//! Check reports with matching text and JSON renderings.
//!
//! A report is the command echo plus a list of per-check records and
//! summary counts. Output is deterministic: no timestamps, no map
//! iteration order, byte-identical reruns for identical inputs.

use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub description: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
    pub exit_status: i32,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Report {
        Report {
            command: command.into(),
            records: Vec::new(),
            summary: Summary { passed: 0, failed: 0 },
            exit_status: 0,
        }
    }

    pub fn with_exit_status(mut self, code: i32) -> Report {
        self.exit_status = code;
        self
    }

    pub fn push(&mut self, description: impl Into<String>, passed: bool, residual: Option<String>) {
        if passed {
            self.summary.passed += 1;
        } else {
            self.summary.failed += 1;
        }
        self.records.push(CheckRecord {
            description: description.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            residual,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        for r in &self.records {
            let marker = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!("{marker}  {}", r.description));
            if let Some(residual) = &r.residual {
                out.push_str(&format!("  [residual: {residual}]"));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "summary: {} passed, {} failed\n",
            self.summary.passed, self.summary.failed
        ));
        out.push_str(&format!("exit: {}\n", self.exit_status));
        out
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization is infallible");
        s.push('\n');
        s
    }
}
