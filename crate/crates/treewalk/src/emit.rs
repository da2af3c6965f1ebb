//! Rendering of command results as compact JSON (default) or CSV.
//!
//! CSV schemas are fixed per subcommand: most results flatten to
//! `key,value` rows with dotted keys for nested objects; hitting
//! profiles use `vertex,time`, enumeration listings use `code`, and
//! lemma suites use `name,status,detail`.

use serde_json::Value;

use crate::CliError;

/// Which fixed CSV schema a command's JSON payload maps onto.
#[derive(Clone, Copy)]
pub enum CsvShape {
    KeyValue,
    Profile,
    Codes,
    Checks,
}

pub struct Rendered {
    pub json: Value,
    pub csv: CsvShape,
}

impl Rendered {
    pub fn key_value(json: Value) -> Self {
        Rendered { json, csv: CsvShape::KeyValue }
    }
}

pub fn json_line(value: &Value) -> String {
    format!("{value}\n")
}

pub fn csv_text(rendered: &Rendered) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let fail = |e: csv::Error| CliError::computation(e.to_string());
    match rendered.csv {
        CsvShape::KeyValue => {
            w.write_record(["key", "value"]).map_err(fail)?;
            for (key, value) in flatten(&rendered.json) {
                w.write_record([key, value]).map_err(fail)?;
            }
        }
        CsvShape::Profile => {
            w.write_record(["vertex", "time"]).map_err(fail)?;
            let times = rendered.json["times"].as_array().expect("profile payload");
            for (vertex, time) in times.iter().enumerate() {
                w.write_record([vertex.to_string(), cell(time)]).map_err(fail)?;
            }
        }
        CsvShape::Codes => {
            w.write_record(["code"]).map_err(fail)?;
            let codes = rendered.json["codes"].as_array().expect("codes payload");
            for code in codes {
                w.write_record([cell(code)]).map_err(fail)?;
            }
        }
        CsvShape::Checks => {
            w.write_record(["name", "status", "detail"]).map_err(fail)?;
            let checks = rendered.json["checks"].as_array().expect("checks payload");
            for check in checks {
                w.write_record([cell(&check["name"]), cell(&check["status"]), cell(&check["detail"])])
                    .map_err(fail)?;
            }
        }
    }
    let bytes = w.into_inner().map_err(|e| CliError::computation(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::computation(e.to_string()))
}

/// One `key,value` row per leaf field, nested objects joined with dots,
/// scalar arrays joined with spaces.
fn flatten(value: &Value) -> Vec<(String, String)> {
    let mut rows = Vec::new();
    match value {
        Value::Object(map) => {
            for (key, inner) in map {
                match inner {
                    Value::Object(_) => {
                        for (sub, cell) in flatten(inner) {
                            rows.push((format!("{key}.{sub}"), cell));
                        }
                    }
                    _ => rows.push((key.clone(), cell(inner))),
                }
            }
        }
        other => rows.push(("value".into(), cell(other))),
    }
    rows
}

fn cell(value: &Value) -> String {
    match value {
        Value::Null => String::new(),
        Value::Bool(b) => b.to_string(),
        Value::Number(x) => x.to_string(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|v| !v.is_array() && !v.is_object()) => {
            items.iter().map(|v| cell(v)).collect::<Vec<_>>().join(" ")
        }
        other => other.to_string(),
    }
}
