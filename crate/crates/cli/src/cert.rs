use std::fmt::Write as _;
use std::time::Instant;

use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    True,
    False,
    Found,
    NotFound,
    Finite,
    Infinite,
    NotApplicable,
    Aborted,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Found => "found",
            Verdict::NotFound => "not-found",
            Verdict::Finite => "finite",
            Verdict::Infinite => "infinite",
            Verdict::NotApplicable => "not-applicable",
            Verdict::Aborted => "aborted",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::True | Verdict::Found | Verdict::Finite => 0,
            Verdict::False | Verdict::NotFound | Verdict::Infinite | Verdict::NotApplicable => 1,
            Verdict::Aborted => 3,
        }
    }

    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }
}

/// Report for one command. `summary` is the headline shown first in text
/// mode and stored under `witnesses.summary` in JSON.
pub struct Certificate {
    pub command: String,
    pub verdict: Verdict,
    pub summary: String,
    pub witnesses: Map<String, Value>,
    pub assumptions: Vec<String>,
    pub timings_ms: f64,
}

impl Certificate {
    pub fn new(command: &str, verdict: Verdict, summary: impl Into<String>) -> Self {
        Certificate {
            command: command.to_string(),
            verdict,
            summary: summary.into(),
            witnesses: Map::new(),
            assumptions: Vec::new(),
            timings_ms: 0.0,
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.witnesses.insert(key.to_string(), value.into());
        self
    }

    pub fn assume(mut self, what: &str) -> Self {
        if !self.assumptions.iter().any(|a| a == what) {
            self.assumptions.push(what.to_string());
        }
        self
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.timings_ms = start.elapsed().as_secs_f64() * 1000.0;
        self
    }

    pub fn to_json(&self) -> Value {
        let mut w = self.witnesses.clone();
        w.insert("summary".into(), Value::String(self.summary.clone()));
        json!({
            "command": self.command,
            "verdict": self.verdict.as_str(),
            "witnesses": w,
            "assumptions": self.assumptions,
            "timings_ms": { "total": (self.timings_ms * 1000.0).round() / 1000.0 },
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "{}", self.summary).unwrap();
        writeln!(s, "verdict: {}", self.verdict.as_str()).unwrap();
        for (k, v) in &self.witnesses {
            writeln!(s, "{k}: {}", render(v)).unwrap();
        }
        let assumed = if self.assumptions.is_empty() { "none".to_string() } else { self.assumptions.join(", ") };
        writeln!(s, "assumptions: {assumed}").unwrap();
        s
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(render).collect::<Vec<_>>().join(", ")),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}
