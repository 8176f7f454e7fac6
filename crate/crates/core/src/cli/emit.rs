//! JSON, CSV and DOT renderers for command results.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};

/// A command result before rendering.
pub struct Payload {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    /// Rows for CSV output; `None` means "flatten `result`".
    pub table: Option<(Vec<String>, Vec<Vec<String>>)>,
    /// Graphviz rendering, for commands that have one.
    pub dot: Option<String>,
}

impl Payload {
    pub fn new(command: &'static str, inputs: Value, result: Value) -> Self {
        Payload {
            command,
            inputs,
            result,
            table: None,
            dot: None,
        }
    }

    pub fn envelope(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "version": env!("CARGO_PKG_VERSION"),
        })
    }

    pub fn to_json(&self) -> Result<String> {
        let mut text = serde_json::to_string_pretty(&self.envelope())
            .map_err(|e| Error::Internal(e.to_string()))?;
        text.push('\n');
        Ok(text)
    }

    pub fn to_csv(&self) -> Result<String> {
        let (header, rows) = match &self.table {
            Some(t) => t.clone(),
            None => flatten(&self.result),
        };
        let mut writer = csv::Writer::from_writer(Vec::new());
        let internal = |e: csv::Error| Error::Internal(e.to_string());
        writer.write_record(&header).map_err(internal)?;
        for row in &rows {
            writer.write_record(row).map_err(internal)?;
        }
        let bytes = writer
            .into_inner()
            .map_err(|e| Error::Internal(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
    }

    pub fn to_dot(&self) -> Result<String> {
        self.dot.clone().ok_or_else(|| {
            Error::Parse(format!("dot output is not available for {}", self.command))
        })
    }
}

/// One header row and one value row; nested objects become dotted columns.
fn flatten(result: &Value) -> (Vec<String>, Vec<Vec<String>>) {
    let (mut header, mut row) = (Vec::new(), Vec::new());
    flatten_into("", result, &mut header, &mut row);
    if header.is_empty() {
        header.push("result".into());
        row.push(cell(result));
    }
    (header, vec![row])
}

fn flatten_into(prefix: &str, value: &Value, header: &mut Vec<String>, row: &mut Vec<String>) {
    match value {
        Value::Object(map) if rational_text(map).is_none() => {
            for (key, inner) in map {
                let name = match prefix {
                    "" => key.clone(),
                    _ => format!("{prefix}.{key}"),
                };
                flatten_into(&name, inner, header, row);
            }
        }
        _ if prefix.is_empty() => {}
        other => {
            header.push(prefix.to_string());
            row.push(cell(other));
        }
    }
}

/// Text for one CSV cell: rationals as `p/q`, integer arrays as `a,b,c`.
pub fn cell(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        Value::Bool(b) => b.to_string(),
        Value::Null => String::new(),
        Value::Object(map) => match rational_text(map) {
            Some(text) => text,
            None => value.to_string(),
        },
        Value::Array(items) if items.iter().all(Value::is_number) => items
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(","),
        Value::Array(_) => value.to_string(),
    }
}

fn rational_text(map: &Map<String, Value>) -> Option<String> {
    if map.len() != 2 {
        return None;
    }
    let num = map.get("num")?.as_str()?;
    let den = map.get("den")?.as_str()?;
    Some(if den == "1" {
        num.to_string()
    } else {
        format!("{num}/{den}")
    })
}

/// Quote a string as a DOT identifier or label.
pub fn dot_quote(text: &str) -> String {
    let escaped = text
        .replace('\\', "\\\\")
        .replace('"', "\\\"")
        .replace('\n', "\\n");
    format!("\"{escaped}\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cells() {
        assert_eq!(cell(&json!({"num": "13", "den": "41"})), "13/41");
        assert_eq!(cell(&json!({"num": "2", "den": "1"})), "2");
        assert_eq!(cell(&json!("inf")), "inf");
        assert_eq!(cell(&json!([4, 4, 2])), "4,4,2");
        assert_eq!(cell(&json!({"k": 2})), r#"{"k":2}"#);
    }

    #[test]
    fn csv_quotes_commas() {
        let mut p = Payload::new(
            "x",
            json!({}),
            json!({"partition": [6, 4], "epsilon": {"num": "13", "den": "41"}}),
        );
        assert_eq!(p.to_csv().unwrap(), "partition,epsilon\n\"6,4\",13/41\n");
        p.result = json!({"value": "inf", "witness": {"k": 3}, "oracle": {"value": {"num": "1", "den": "2"}}});
        assert_eq!(p.to_csv().unwrap(), "value,witness.k,oracle.value\ninf,3,1/2\n");
        p.result = json!("inf");
        assert_eq!(p.to_csv().unwrap(), "result\ninf\n");
        p.table = Some((vec!["a".into()], vec![vec!["1".into()]]));
        assert_eq!(p.to_csv().unwrap(), "a\n1\n");
        assert!(p.to_dot().is_err());
    }
}
