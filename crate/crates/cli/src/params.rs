//! Query parameters: document `parameters` merged with `--param key=value`
//! overrides, with typed access and a per-query whitelist.

use std::collections::BTreeMap;

use serde_json::Value;

use crate::error::CliError;

#[derive(Clone, Debug, Default)]
pub struct Params {
    values: BTreeMap<String, Value>,
}

impl Params {
    pub fn new(
        document_params: &BTreeMap<String, Value>,
        overrides: &[String],
    ) -> Result<Self, CliError> {
        let mut values = document_params.clone();
        for raw in overrides {
            let (key, text) = raw.split_once('=').ok_or_else(|| {
                CliError::usage(format!("--param expects key=value, got '{raw}'"))
            })?;
            values.insert(key.trim().to_string(), parse_scalar(text.trim()));
        }
        Ok(Params { values })
    }

    /// Rejects parameters this query does not understand.
    pub fn restrict_to(&self, allowed: &[&str]) -> Result<(), CliError> {
        for key in self.values.keys() {
            if !allowed.contains(&key.as_str()) {
                return Err(CliError::schema(format!(
                    "unknown parameter '{key}' (allowed: {})",
                    allowed.join(", ")
                )));
            }
        }
        Ok(())
    }

    /// The parameters as a JSON object, echoed in reports.
    pub fn echo(&self) -> Value {
        Value::Object(self.values.clone().into_iter().collect())
    }

    pub fn set_default(&mut self, key: &str, value: Value) {
        self.values.entry(key.to_string()).or_insert(value);
    }

    pub fn get_str(&self, key: &str) -> Result<Option<String>, CliError> {
        match self.values.get(key) {
            None => Ok(None),
            Some(Value::String(s)) => Ok(Some(s.clone())),
            Some(other) => Err(CliError::schema(format!(
                "parameter '{key}' must be a string, got {other}"
            ))),
        }
    }

    pub fn get_i64(&self, key: &str) -> Result<Option<i64>, CliError> {
        match self.values.get(key) {
            None => Ok(None),
            Some(Value::Number(n)) if n.as_i64().is_some() => Ok(n.as_i64()),
            Some(other) => Err(CliError::schema(format!(
                "parameter '{key}' must be an integer, got {other}"
            ))),
        }
    }

    pub fn get_u64(&self, key: &str) -> Result<Option<u64>, CliError> {
        match self.values.get(key) {
            None => Ok(None),
            Some(Value::Number(n)) if n.as_u64().is_some() => Ok(n.as_u64()),
            Some(other) => Err(CliError::schema(format!(
                "parameter '{key}' must be a nonnegative integer, got {other}"
            ))),
        }
    }

    pub fn get_bool(&self, key: &str) -> Result<Option<bool>, CliError> {
        match self.values.get(key) {
            None => Ok(None),
            Some(Value::Bool(b)) => Ok(Some(*b)),
            Some(other) => Err(CliError::schema(format!(
                "parameter '{key}' must be a boolean, got {other}"
            ))),
        }
    }

    pub fn require_i64(&self, key: &str) -> Result<i64, CliError> {
        self.get_i64(key)?
            .ok_or_else(|| CliError::schema(format!("parameter '{key}' is required")))
    }
}

fn parse_scalar(text: &str) -> Value {
    match text {
        "true" => Value::Bool(true),
        "false" => Value::Bool(false),
        _ => {
            if let Ok(n) = text.parse::<i64>() {
                Value::Number(n.into())
            } else {
                Value::String(text.to_string())
            }
        }
    }
}
