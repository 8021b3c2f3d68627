//! JSON envelope wrapping every machine-readable command result.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;

pub const ENVELOPE_SCHEMA: &str = "hilbtail-envelope/1";

/// Field order is fixed by the struct; nested objects keep insertion order,
/// so parsing and re-serializing an envelope reproduces it byte for byte.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputEnvelope {
    pub schema_version: String,
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub warnings: Vec<String>,
}

impl OutputEnvelope {
    pub fn new(
        command: impl Into<String>,
        inputs: Value,
        result: Value,
        warnings: Vec<String>,
    ) -> Self {
        OutputEnvelope {
            schema_version: ENVELOPE_SCHEMA.to_string(),
            command: command.into(),
            inputs,
            result,
            warnings,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lpoly::LPoly;
    use serde_json::json;

    #[test]
    fn round_trip_is_byte_identical() {
        let class = LPoly::from_i64s(0, &[1, 2, 3, 2, 1, 0, 0, 0, 0, 0, 7]);
        let env = OutputEnvelope::new(
            "hilb",
            json!({"n": 2, "format": "json"}),
            json!({"class": class, "euler": "9", "zeta": null, "alpha": [3, 1]}),
            vec!["note".into()],
        );
        let text = env.to_json().unwrap();
        let back = OutputEnvelope::from_json(&text).unwrap();
        assert_eq!(back, env);
        assert_eq!(back.to_json().unwrap(), text);
        // Keys keep numeric degree order rather than lexicographic.
        assert!(text.find("\"2\"").unwrap() < text.find("\"10\"").unwrap());
        assert!(text.starts_with("{\n  \"schema_version\": \"hilbtail-envelope/1\""));
    }
}
