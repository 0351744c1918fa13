//! Defaults read from a `key = value` file; command-line flags override.

use std::path::Path;

use toml::{Table, Value};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Config {
    /// Variable precedence for `analyze`, highest first.
    pub order: Option<Vec<String>>,
    pub jobs: Option<usize>,
    pub max_nodes: Option<u64>,
    pub json: Option<bool>,
    pub quiet: Option<bool>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let table: Table = toml::from_str(text).map_err(|e| format!("config: {}", e.message()))?;
        let mut cfg = Config::default();
        for (key, value) in &table {
            match key.as_str() {
                "order" => {
                    cfg.order = Some(
                        string_list(value)
                            .ok_or("config: order must be a list of variable names")?,
                    )
                }
                "jobs" => cfg.jobs = Some(positive(value, key)? as usize),
                "max_nodes" => cfg.max_nodes = Some(positive(value, key)?),
                "json" => {
                    cfg.json = Some(
                        value
                            .as_bool()
                            .ok_or("config: json must be true or false")?,
                    )
                }
                "quiet" => {
                    cfg.quiet = Some(
                        value
                            .as_bool()
                            .ok_or("config: quiet must be true or false")?,
                    )
                }
                other => return Err(format!("config: unknown key `{other}`")),
            }
        }
        Ok(cfg)
    }
}

fn positive(value: &Value, key: &str) -> Result<u64, String> {
    value
        .as_integer()
        .filter(|&n| n > 0)
        .map(|n| n as u64)
        .ok_or_else(|| format!("config: {key} must be a positive integer"))
}

/// Accepts `["x3", "x1"]` or `"x3,x1"`.
pub fn string_list(value: &Value) -> Option<Vec<String>> {
    match value {
        Value::String(s) => Some(split_names(s)),
        Value::Array(items) => items
            .iter()
            .map(|v| v.as_str().map(str::to_owned))
            .collect(),
        _ => None,
    }
}

pub fn split_names(s: &str) -> Vec<String> {
    s.split(|c: char| c == ',' || c == '>' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .map(str::to_owned)
        .collect()
}
