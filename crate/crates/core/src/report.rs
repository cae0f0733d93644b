//! Verification reports: a table of cases, each marked pass or fail.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub cells: Vec<String>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Row>,
    pub verdict: Verdict,
    /// Wall-clock time; excluded from equality of report content.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl RunReport {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        RunReport {
            command: command.to_string(),
            parameters: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            verdict: Verdict::Pass,
            elapsed_ms: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.parameters.push((key.to_string(), value.to_string()));
        self
    }

    pub fn push(&mut self, cells: Vec<String>, pass: bool) {
        self.rows.push(Row { cells, pass });
        if !pass {
            self.verdict = Verdict::Fail;
        }
    }

    /// Appends every row of `other`, keeping this report's header.
    pub fn extend(&mut self, other: RunReport) {
        for row in other.rows {
            self.push(row.cells, row.pass);
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| !r.pass).count()
    }

    /// Aligned text table followed by the verdict line; no timing.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.command);
        for (k, v) in &self.parameters {
            out.push_str(&format!(" {k}={v}"));
        }
        out.push('\n');
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
        for row in &self.rows {
            for (j, cell) in row.cells.iter().enumerate() {
                if j < widths.len() {
                    widths[j] = widths[j].max(cell.len());
                } else {
                    widths.push(cell.len());
                }
            }
        }
        let line = |cells: &[String], status: &str| {
            let mut s = String::new();
            for (j, w) in widths.iter().enumerate() {
                let cell = cells.get(j).map(String::as_str).unwrap_or("");
                s.push_str(&format!("{cell:<w$}  "));
            }
            s.push_str(status);
            s.trim_end().to_string() + "\n"
        };
        if !self.columns.is_empty() {
            out.push_str(&line(&self.columns, "status"));
        }
        for row in &self.rows {
            out.push_str(&line(&row.cells, if row.pass { "ok" } else { "FAIL" }));
        }
        out.push_str(&format!(
            "verdict: {} ({} cases, {} failed)\n",
            self.verdict,
            self.rows.len(),
            self.failures()
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_tracks_rows() {
        let mut r = RunReport::new("demo", &["case", "value"]).param("n", 4);
        r.push(vec!["a".into(), "1".into()], true);
        assert!(r.passed());
        r.push(vec!["bb".into(), "22".into()], false);
        assert!(!r.passed());
        assert_eq!(r.failures(), 1);
        let text = r.render();
        assert!(text.starts_with("demo n=4\ncase  value  status\n"));
        assert!(text.contains("bb    22     FAIL"));
        assert!(text.ends_with("verdict: FAIL (2 cases, 1 failed)\n"));
    }

    #[test]
    fn json_has_verdict_string() {
        let r = RunReport::new("demo", &[]);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["verdict"], "PASS");
        assert!(json.get("elapsed_ms").is_none());
    }
}
