//! Report assembly and rendering.
//!
//! Reports serialize to canonical JSON: object keys sorted (serde_json's
//! default map is ordered), pretty-printed, trailing newline. Identical
//! documents therefore produce byte-identical reports. The text format is a
//! deterministic flat rendering of the same tree.

use serde_json::{json, Map, Value};

use cohomlen_core::group::SubtorusLine;
use cohomlen_core::length::LengthResult;
use cohomlen_core::oracle::OracleReport;
use cohomlen_core::theorems::MapVerdict;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Clone, Debug)]
pub struct Report {
    pub query: String,
    pub parameters: Value,
    pub result: Value,
    pub provenance: Vec<String>,
    pub violations: Vec<String>,
}

impl Report {
    pub fn new(query: &str, parameters: Value, result: Value) -> Self {
        Report {
            query: query.to_string(),
            parameters,
            result,
            provenance: Vec::new(),
            violations: Vec::new(),
        }
    }

    pub fn with_provenance(mut self, tags: Vec<String>) -> Self {
        self.provenance = tags;
        self
    }

    pub fn to_value(&self) -> Value {
        json!({
            "schema": SCHEMA_VERSION,
            "query": self.query,
            "parameters": self.parameters,
            "result": self.result,
            "provenance": self.provenance,
            "violations": self.violations,
        })
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.to_value())
            .expect("report values contain no non-serializable data");
        text.push('\n');
        text
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        render_text(&self.to_value(), 0, None, &mut out);
        out
    }
}

fn render_text(value: &Value, indent: usize, key: Option<&str>, out: &mut String) {
    let pad = "  ".repeat(indent);
    let label = key.map(|k| format!("{k}: ")).unwrap_or_default();
    match value {
        Value::Object(map) if map.is_empty() => {
            out.push_str(&format!("{pad}{label}(none)\n"));
        }
        Value::Object(map) => {
            if let Some(k) = key {
                out.push_str(&format!("{pad}{k}:\n"));
            }
            for (k, v) in map {
                render_text(v, indent + usize::from(key.is_some()), Some(k), out);
            }
        }
        Value::Array(items) if items.is_empty() => {
            out.push_str(&format!("{pad}{label}(none)\n"));
        }
        Value::Array(items) => {
            if let Some(k) = key {
                out.push_str(&format!("{pad}{k}:\n"));
            }
            for v in items {
                match v {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}  -\n"));
                        render_text(v, indent + 2, None, out);
                    }
                    _ => out.push_str(&format!("{pad}  - {}\n", scalar_text(v))),
                }
            }
        }
        scalar => out.push_str(&format!("{pad}{label}{}\n", scalar_text(scalar))),
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn line_value(line: &SubtorusLine) -> Value {
    Value::Array(
        line.direction()
            .iter()
            .map(|&c| Value::Number(c.into()))
            .collect(),
    )
}

pub fn length_value(l: &LengthResult) -> Value {
    json!({
        "kind": l.kind(),
        "lo": l.lo(),
        "hi": l.hi(),
        "basis": l.basis().to_string(),
    })
}

pub fn verdict_value(v: &MapVerdict) -> Value {
    json!({
        "exists": v.exists.to_string(),
        "witnesses": v.witnesses.iter().map(line_value).collect::<Vec<_>>(),
        "rationale": v.rationale,
    })
}

pub fn oracle_value(r: &OracleReport) -> Value {
    json!({
        "lambda": r.lambda,
        "witness": r.witness.iter().map(line_value).collect::<Vec<_>>(),
        "formula_value": r.formula_value,
        "agrees": r.agrees,
        "search_bound": r.search_bound,
    })
}

pub fn object(entries: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in entries {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}
