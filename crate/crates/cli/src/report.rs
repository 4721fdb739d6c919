//! The JSON report envelope: canonical serialization plus a content hash.

use serde::Serialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u64 = 1;

/// A finished report. `ok` decides the exit status.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub invocation: Value,
    pub result: Value,
    pub counters: Map<String, Value>,
    pub ok: bool,
    /// Human-readable lines for text mode.
    pub lines: Vec<String>,
}

impl Report {
    pub fn new(command: &str, invocation: Value) -> Report {
        Report {
            command: command.to_string(),
            invocation,
            result: Value::Null,
            counters: Map::new(),
            ok: true,
            lines: Vec::new(),
        }
    }

    pub fn result(mut self, result: impl Serialize) -> Report {
        self.result = serde_json::to_value(result).expect("report values serialize");
        self
    }

    pub fn count(&mut self, key: &str, value: u64) {
        self.counters.insert(key.to_string(), json!(value));
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn to_json(&self) -> Value {
        let mut counters = self.counters.clone();
        counters.insert("ok".into(), json!(self.ok));
        seal(json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "invocation": self.invocation,
            "result": self.result,
            "summary": counters,
        }))
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for l in &self.lines {
            s.push_str(l);
            s.push('\n');
        }
        s.push_str(if self.ok { "ok\n" } else { "FAILED\n" });
        s
    }
}

/// An error report for usage, parse and cap failures.
pub fn error_report(command: &str, code: &str, message: &str) -> Value {
    seal(json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "error": { "code": code, "message": message },
    }))
}

/// Adds the `hash` field: SHA-256 over the canonical form of everything else.
pub fn seal(mut v: Value) -> Value {
    let hash = content_hash(&v);
    v.as_object_mut().expect("reports are objects").insert("hash".into(), json!(hash));
    v
}

/// Keys are sorted (serde_json's default map is ordered) and the output is
/// compact, so equal values always hash equally.
pub fn content_hash(v: &Value) -> String {
    let mut v = v.clone();
    if let Some(o) = v.as_object_mut() {
        o.remove("hash");
    }
    let bytes = serde_json::to_vec(&v).expect("values serialize");
    hex::encode(Sha256::digest(&bytes))
}

pub fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hash_ignores_key_order_and_its_own_field() {
        let a = seal(json!({"b": 1, "a": [1, 2]}));
        let b: Value = serde_json::from_str(r#"{"a":[1,2],"b":1}"#).unwrap();
        assert_eq!(a["hash"], json!(content_hash(&b)));
        assert_eq!(content_hash(&a), content_hash(&b));
        assert_eq!(a["hash"].as_str().unwrap().len(), 64);
    }

    #[test]
    fn hash_changes_with_content() {
        assert_ne!(content_hash(&json!({"a": 1})), content_hash(&json!({"a": 2})));
    }
}
