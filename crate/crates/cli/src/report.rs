//! JSON and text rendering of command results.
//!
//! Objects are `serde_json::Map`s, which keep keys sorted, so output is
//! byte-stable for identical input.

use fpure_core::poly::render_monomial;
use fpure_core::{Certificate, Ring};
use serde_json::{json, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub input_digest: Option<String>,
    pub verdicts: Vec<Value>,
    pub aggregate: bool,
    pub elapsed_ms: Option<u64>,
    /// Command-specific value, e.g. a threshold or a basis.
    pub result: Value,
    pub error: Option<Value>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            command: command.to_string(),
            input_digest: None,
            verdicts: Vec::new(),
            aggregate: false,
            elapsed_ms: None,
            result: Value::Null,
            error: None,
            notes: Vec::new(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "input_digest": self.input_digest,
            "verdicts": self.verdicts,
            "aggregate": self.aggregate,
            "elapsed_ms": self.elapsed_ms,
            "version": VERSION,
            "result": self.result,
            "error": self.error,
            "notes": self.notes,
        })
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("{} (fpure {VERSION})\n", self.command);
        if let Some(err) = &self.error {
            out.push_str(&format!("error: {}\n", err["message"].as_str().unwrap_or("?")));
        }
        for v in &self.verdicts {
            out.push_str(&format!("  {}\n", text_line(v)));
        }
        if !self.result.is_null() {
            out.push_str(&format!("result: {}\n", self.result));
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        out.push_str(&format!("aggregate: {}\n", self.aggregate));
        if let Some(ms) = self.elapsed_ms {
            out.push_str(&format!("elapsed: {ms} ms\n"));
        }
        out
    }
}

fn text_line(v: &Value) -> String {
    let Some(obj) = v.as_object() else {
        return v.to_string();
    };
    obj.iter()
        .map(|(k, v)| match v {
            Value::String(s) => format!("{k}={s}"),
            other => format!("{k}={other}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn certificate_json(ring: &Ring, cert: &Certificate, verified: bool) -> Value {
    let witness = cert.witness.as_ref().map(|w| {
        json!({
            "monomial": render_monomial(ring, &w.monomial),
            "coefficient": w.coefficient,
            "generator": {
                "factors": w.factor_choices,
                "colon": w.colon_generator,
            },
        })
    });
    json!({
        "q": cert.q.q(),
        "holds": cert.holds,
        "witness": witness,
        "exponents_used": cert.exponents_used,
        "convention": cert.convention.as_str(),
        "verified": verified,
    })
}

pub fn error_json(kind: &str, message: String, position: Option<usize>) -> Value {
    json!({ "kind": kind, "message": message, "position": position })
}
