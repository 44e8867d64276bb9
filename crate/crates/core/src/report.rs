//! Claim reports and their table / JSON renderings.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Int(i64),
    Bool(bool),
    Text(String),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(n) => write!(f, "{n}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Text(s) => f.write_str(s),
        }
    }
}

impl From<i64> for Value {
    fn from(n: i64) -> Self {
        Value::Int(n)
    }
}

impl From<usize> for Value {
    fn from(n: usize) -> Self {
        Value::Int(n as i64)
    }
}

impl From<u32> for Value {
    fn from(n: u32) -> Self {
        Value::Int(n as i64)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Skipped(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => f.write_str("HOLDS"),
            Verdict::Fails => f.write_str("FAILS"),
            Verdict::Skipped(reason) => write!(f, "SKIPPED({reason})"),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// One evaluated claim. A `FAILS` verdict always carries a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub scenario: String,
    pub claim: String,
    pub anchor: String,
    pub values: BTreeMap<String, Value>,
    pub verdict: Verdict,
    pub witness: Option<String>,
}

impl Report {
    /// A report with verdict `HOLDS` and no values yet.
    pub fn new(scenario: impl Into<String>, claim: impl Into<String>, anchor: impl Into<String>) -> Self {
        Report {
            scenario: scenario.into(),
            claim: claim.into(),
            anchor: anchor.into(),
            values: BTreeMap::new(),
            verdict: Verdict::Holds,
            witness: None,
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.values.insert(key.to_string(), value.into());
        self
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.values.insert(key.to_string(), value.into());
    }

    pub fn fails(mut self, witness: impl Into<String>) -> Self {
        self.verdict = Verdict::Fails;
        self.witness = Some(witness.into());
        self
    }

    pub fn skipped(mut self, reason: impl Into<String>) -> Self {
        self.verdict = Verdict::Skipped(reason.into());
        self
    }

    /// Verdict `HOLDS` when `ok`, otherwise `FAILS` with the given witness.
    pub fn decide(self, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            self
        } else {
            self.fails(witness())
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn value(&self, key: &str) -> Option<&Value> {
        self.values.get(key)
    }

    pub fn int(&self, key: &str) -> Option<i64> {
        match self.values.get(key) {
            Some(Value::Int(n)) => Some(*n),
            _ => None,
        }
    }

    pub fn text(&self, key: &str) -> Option<&str> {
        match self.values.get(key) {
            Some(Value::Text(s)) => Some(s),
            _ => None,
        }
    }

    pub fn flag(&self, key: &str) -> Option<bool> {
        match self.values.get(key) {
            Some(Value::Bool(b)) => Some(*b),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
}

fn table(r: &Report, out: &mut String) {
    use std::fmt::Write;
    let _ = writeln!(out, "[{}] {}", r.scenario, r.claim);
    let _ = writeln!(out, "  anchor: {}", r.anchor);
    for (k, v) in &r.values {
        let _ = writeln!(out, "  {k} = {v}");
    }
    let _ = writeln!(out, "  verdict: {}", r.verdict);
    if let Some(w) = &r.witness {
        let _ = writeln!(out, "  witness: {w}");
    }
}

pub fn emit_report(r: &Report, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(r).expect("report serializes"),
        Format::Table => {
            let mut s = String::new();
            table(r, &mut s);
            s
        }
    }
}

pub fn emit_reports(rs: &[Report], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(rs).expect("reports serialize"),
        Format::Table => {
            let mut s = String::new();
            for r in rs {
                table(r, &mut s);
            }
            s
        }
    }
}

/// `0` when nothing fails, `1` otherwise.
pub fn exit_code(rs: &[Report]) -> i32 {
    if rs.iter().any(|r| r.verdict == Verdict::Fails) {
        1
    } else {
        0
    }
}

pub(crate) fn ser_polys<S: Serializer>(ps: &[Polynomial], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(ps.iter().map(|p| p.to_string()))
}

pub(crate) fn join_polys(ps: &[Polynomial]) -> String {
    ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_report_shows_witness() {
        let r = Report::new("s", "I^2 = JI", "square").with("k", 3usize).fails("x^2*y^4");
        let t = emit_report(&r, Format::Table);
        assert!(t.contains("witness: x^2*y^4"));
        let j = emit_report(&r, Format::Json);
        assert!(j.contains("\"witness\": \"x^2*y^4\""));
        assert!(j.contains("\"verdict\": \"FAILS\""));
        assert_eq!(exit_code(&[r]), 1);
    }

    #[test]
    fn json_keys_are_stable() {
        let r = Report::new("s", "c", "a").with("ok", true).skipped("not m-primary");
        let text = emit_report(&r, Format::Json);
        let pos: Vec<usize> = ["scenario", "claim", "anchor", "values", "verdict", "witness"]
            .iter()
            .map(|k| text.find(&format!("\"{k}\"")).unwrap())
            .collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["verdict"], "SKIPPED(not m-primary)");
        assert_eq!(exit_code(&[r.clone()]), 0);
        assert_eq!(exit_code(&[Report::new("t", "c", "a")]), 0);
    }
}
