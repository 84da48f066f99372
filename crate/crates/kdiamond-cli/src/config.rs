//! Optional key=value config file supplying flag defaults.
//!
//! Keys mirror the long flag names (`k`, `from`, `to`, `d`, `horizon`,
//! `points`, `prec-cap`, `format`). Lines starting with `#` are comments.

use crate::output::OutputFormat;
use std::collections::HashMap;
use std::path::Path;

#[derive(Default)]
pub struct Defaults {
    values: HashMap<String, String>,
}

impl Defaults {
    pub fn load(path: Option<&Path>) -> Result<Defaults, String> {
        let Some(path) = path else {
            return Ok(Defaults::default());
        };
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let mut values = HashMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(format!(
                    "{}:{}: expected key=value",
                    path.display(),
                    lineno + 1
                ));
            };
            values.insert(key.trim().to_string(), value.trim().to_string());
        }
        Ok(Defaults { values })
    }

    pub fn get_string(&self, key: &str) -> Option<String> {
        self.values.get(key).cloned()
    }

    pub fn get_u64(&self, key: &str) -> Option<u64> {
        self.values.get(key).and_then(|v| v.parse().ok())
    }

    pub fn get_u32(&self, key: &str) -> Option<u32> {
        self.values.get(key).and_then(|v| v.parse().ok())
    }

    pub fn get_usize(&self, key: &str) -> Option<usize> {
        self.values.get(key).and_then(|v| v.parse().ok())
    }

    pub fn get_format(&self) -> Option<OutputFormat> {
        match self.values.get("format").map(String::as_str) {
            Some("json") => Some(OutputFormat::Json),
            Some("jsonl") => Some(OutputFormat::Jsonl),
            Some("csv") => Some(OutputFormat::Csv),
            Some("table") => Some(OutputFormat::Table),
            _ => None,
        }
    }
}
