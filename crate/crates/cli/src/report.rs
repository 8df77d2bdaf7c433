//! The machine-readable report document and its human-readable rendering.
//!
//! Serialized output is fully deterministic: no wall-clock values, fixed
//! struct field order, name-sorted tables. Timing is printed to the text
//! stream only when `--timings` is given.

use serde::Serialize;
use whopf_core::report::Report;

#[derive(Debug, Serialize)]
pub struct ReportDocument {
    pub field: String,
    pub tasks: Vec<TaskReport>,
    pub summary: Summary,
}

#[derive(Debug, Serialize)]
pub struct TaskReport {
    pub name: String,
    pub op: String,
    /// `pass`, `fail`, or `error`
    pub status: String,
    pub items: Vec<ItemReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub data: Vec<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct ItemReport {
    pub label: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errored: usize,
}

impl TaskReport {
    pub fn from_core(name: &str, op: &str, report: &Report) -> TaskReport {
        TaskReport {
            name: name.to_string(),
            op: op.to_string(),
            status: if report.all_passed() { "pass" } else { "fail" }.to_string(),
            items: report
                .items
                .iter()
                .map(|i| ItemReport {
                    label: i.label.clone(),
                    passed: i.passed,
                    witness: i.witness.clone(),
                })
                .collect(),
            data: Vec::new(),
            error: None,
        }
    }

    pub fn errored(name: &str, op: &str, message: String) -> TaskReport {
        TaskReport {
            name: name.to_string(),
            op: op.to_string(),
            status: "error".to_string(),
            items: Vec::new(),
            data: Vec::new(),
            error: Some(message),
        }
    }

    pub fn push_data(&mut self, key: &str, value: impl std::fmt::Display) {
        self.data.push((key.to_string(), value.to_string()));
    }

    pub fn absorb(&mut self, report: &Report) {
        if !report.all_passed() {
            self.status = "fail".to_string();
        }
        self.items.extend(report.items.iter().map(|i| ItemReport {
            label: i.label.clone(),
            passed: i.passed,
            witness: i.witness.clone(),
        }));
    }
}

impl ReportDocument {
    pub fn new(field: String) -> ReportDocument {
        ReportDocument {
            field,
            tasks: Vec::new(),
            summary: Summary {
                total: 0,
                passed: 0,
                failed: 0,
                errored: 0,
            },
        }
    }

    pub fn push(&mut self, task: TaskReport) {
        self.summary.total += 1;
        match task.status.as_str() {
            "pass" => self.summary.passed += 1,
            "fail" => self.summary.failed += 1,
            _ => self.summary.errored += 1,
        }
        self.tasks.push(task);
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0 && self.summary.errored == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }

    /// Human-readable rendering; `timings` holds per-task wall-clock
    /// milliseconds when requested.
    pub fn to_text(&self, timings: Option<&[u128]>) -> String {
        let mut out = String::new();
        out.push_str(&format!("field: {}\n", self.field));
        for (k, t) in self.tasks.iter().enumerate() {
            let verdict = match t.status.as_str() {
                "pass" => "PASS",
                "fail" => "FAIL",
                _ => "ERROR",
            };
            out.push_str(&format!("[{verdict}] {} ({})\n", t.name, t.op));
            if let Some(e) = &t.error {
                out.push_str(&format!("    error: {e}\n"));
            }
            for (key, value) in &t.data {
                out.push_str(&format!("    {key}: {value}\n"));
            }
            for item in &t.items {
                if item.passed {
                    continue; // summary lines only list failures; JSON has everything
                }
                out.push_str(&format!("    FAIL {}\n", item.label));
                if let Some(w) = &item.witness {
                    out.push_str(&format!("         {w}\n"));
                }
            }
            let checks = t.items.len();
            let ok = t.items.iter().filter(|i| i.passed).count();
            out.push_str(&format!("    checks: {ok}/{checks}\n"));
            if let Some(ts) = timings {
                if let Some(ms) = ts.get(k) {
                    out.push_str(&format!("    time: {ms} ms\n"));
                }
            }
        }
        out.push_str(&format!(
            "summary: {} tasks, {} passed, {} failed, {} errored\n",
            self.summary.total, self.summary.passed, self.summary.failed, self.summary.errored
        ));
        out
    }
}
