//! Report assembly and emission: aligned text or versioned JSON with stable
//! field names.

use saito_core::report::{Check, Status};
use serde_json::{Map, Value};

/// The text body is either key/value rows (info, dual) or bare canonical
/// lines (euler, zeta), followed by any checks.
pub enum Body {
    Rows(Vec<(String, String)>),
    Bare(Vec<String>),
}

pub struct Report {
    body: Body,
    json: Map<String, Value>,
    checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Report {
        Report {
            body: Body::Rows(Vec::new()),
            json: Map::new(),
            checks: Vec::new(),
        }
    }

    /// Add a key/value row to both the text body and the JSON object.
    pub fn row(&mut self, key: &str, text: impl Into<String>, json: Value) {
        let text = text.into();
        match &mut self.body {
            Body::Rows(rows) => rows.push((key.to_string(), text)),
            Body::Bare(lines) => lines.push(text),
        }
        self.json.insert(key.to_string(), json);
    }

    /// Switch the text body to bare lines (canonical-rendering verbs).
    pub fn bare(&mut self) {
        if matches!(self.body, Body::Rows(ref r) if r.is_empty()) {
            self.body = Body::Bare(Vec::new());
        }
    }

    /// Add a text-only line (no JSON counterpart).
    pub fn line(&mut self, text: impl Into<String>) {
        let text = text.into();
        match &mut self.body {
            Body::Rows(rows) => rows.push((String::new(), text)),
            Body::Bare(lines) => lines.push(text),
        }
    }

    /// Add a JSON field with no text counterpart.
    pub fn json_only(&mut self, key: &str, json: Value) {
        self.json.insert(key.to_string(), json);
    }

    pub fn checks(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    pub fn passed(&self) -> bool {
        saito_core::report::all_passed(&self.checks)
    }

    pub fn check_count(&self) -> usize {
        self.checks.len()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.body {
            Body::Rows(rows) => {
                let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in rows {
                    out.push_str(&format!("{k:<width$} = {v}\n"));
                }
            }
            Body::Bare(lines) => {
                for line in lines {
                    out.push_str(line);
                    out.push('\n');
                }
            }
        }
        for c in &self.checks {
            out.push_str(&format!("[{}] {}\n", c.status, c.name));
            if c.status != Status::Info {
                out.push_str(&format!("       lhs: {}\n", c.lhs));
                out.push_str(&format!("       rhs: {}\n", c.rhs));
            } else if !c.lhs.is_empty() {
                out.push_str(&format!("       {}\n", c.lhs));
            }
        }
        if !self.checks.is_empty() {
            let failed = self.checks.iter().filter(|c| c.status == Status::Fail).count();
            let passed = self.checks.iter().filter(|c| c.status == Status::Pass).count();
            out.push_str(&format!("{passed} passed, {failed} failed\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        if self.json.is_empty() && self.checks.is_empty() {
            return "{}".into();
        }
        let mut obj = self.json.clone();
        obj.insert("schema".into(), Value::from(1));
        if !self.checks.is_empty() {
            let checks: Vec<Value> = self
                .checks
                .iter()
                .map(|c| {
                    let mut m = Map::new();
                    m.insert("name".into(), Value::from(c.name.clone()));
                    m.insert("status".into(), Value::from(c.status.to_string()));
                    m.insert("lhs".into(), Value::from(c.lhs.clone()));
                    m.insert("rhs".into(), Value::from(c.rhs.clone()));
                    Value::Object(m)
                })
                .collect();
            obj.insert("checks".into(), Value::from(checks));
        }
        serde_json::to_string_pretty(&Value::Object(obj)).expect("report serializes")
    }

    pub fn emit(&self, json: bool) -> String {
        if json {
            self.to_json()
        } else {
            self.to_text()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_renders_as_braces() {
        let rep = Report::new();
        assert_eq!(rep.to_json(), "{}");
        assert_eq!(rep.to_text(), "");
    }

    #[test]
    fn rows_are_aligned_on_the_longest_key() {
        let mut rep = Report::new();
        rep.row("f", "x^2", Value::from("x^2"));
        rep.row("weights", "1/2", Value::from(vec!["1/2"]));
        assert_eq!(rep.to_text(), "f       = x^2\nweights = 1/2\n");
    }

    #[test]
    fn failed_check_sets_status_and_counts() {
        let mut rep = Report::new();
        rep.checks([Check::pass("a", "1", "1"), Check::fail("b", "1", "2")]);
        assert!(!rep.passed());
        let text = rep.to_text();
        assert!(text.contains("[FAIL] b"));
        assert!(text.ends_with("1 passed, 1 failed\n"));
        let v: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
        assert_eq!(v["checks"][1]["status"], "FAIL");
        assert_eq!(v["schema"], 1);
    }

    #[test]
    fn json_keys_are_sorted_for_byte_stability() {
        let mut rep = Report::new();
        rep.row("zeta", "1", Value::from("1"));
        rep.row("det", "2", Value::from(2));
        let text = rep.to_json();
        assert!(text.find("\"det\"").unwrap() < text.find("\"zeta\"").unwrap());
    }
}
