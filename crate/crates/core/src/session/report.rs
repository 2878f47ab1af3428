//! Reports and their deterministic JSON form.

use serde_json::{json, Map, Value};

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub input_echo: String,
    pub result: Value,
    pub witnesses: Vec<Value>,
    pub certifications: Vec<Value>,
    pub timing_ms: f64,
    /// `(code, exit status)` when the command failed.
    pub error: Option<(String, i32)>,
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "input_echo": self.input_echo,
            "result": self.result,
            "witnesses": self.witnesses,
            "certifications": self.certifications,
            "timing_ms": self.timing_ms,
            "engine_version": ENGINE_VERSION,
        })
    }

    pub fn exit_code(&self) -> i32 {
        self.error.as_ref().map_or(0, |e| e.1)
    }

    /// The headline boolean of a verdict-bearing command.
    pub fn verdict(&self) -> Option<bool> {
        self.result.get("verdict").and_then(Value::as_bool)
    }
}

/// Reports as a pretty-printed JSON array. Object keys come out sorted.
pub fn emit_json(reports: &[Report]) -> String {
    let arr = Value::Array(reports.iter().map(Report::to_json).collect());
    let mut s = serde_json::to_string_pretty(&arr).expect("serializable");
    s.push('\n');
    s
}

/// Drop every `timing_ms` field, for comparing runs.
pub fn strip_timing(v: &Value) -> Value {
    match v {
        Value::Object(m) => {
            let out: Map<String, Value> =
                m.iter().filter(|(k, _)| k.as_str() != "timing_ms").map(|(k, v)| (k.clone(), strip_timing(v))).collect();
            Value::Object(out)
        }
        Value::Array(a) => Value::Array(a.iter().map(strip_timing).collect()),
        other => other.clone(),
    }
}
