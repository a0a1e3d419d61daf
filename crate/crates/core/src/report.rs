//! Machine-readable reports in JSON or CSV.
//!
//! JSON: `{"command", "inputs", "result", "meta": {"version", "seed"}}`.
//! A report carrying a table puts its rows in `result` under the table name.
//!
//! CSV: a report with a table renders only that table (header row, then one
//! row per record); otherwise one header row of result keys and one data
//! row. LF line endings, no quoting, no trailing whitespace.
//!
//! Reals are printed with 10 significant digits in plain decimal notation.
//! JSON numbers are the same decimal strings parsed back, so both formats
//! carry identical numeric payloads.

use serde_json::{Map, Number, Value};

/// Significant digits used for every real in a report.
pub const SIG_DIGITS: usize = 10;

/// `v` with [`SIG_DIGITS`] significant digits, never in exponent notation.
pub fn format_sig(v: f64) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    if v == 0.0 {
        return format!("{:.*}", SIG_DIGITS - 1, 0.0);
    }
    // exponent after rounding, so 9.9999999999 counts as 1e1
    let sci = format!("{:.*e}", SIG_DIGITS - 1, v);
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .expect("rust scientific format");
    let decimals = (SIG_DIGITS as i32 - 1 - exp).max(0) as usize;
    let s = format!("{v:.decimals$}");
    // rounding can produce "-0.000..."
    if s.trim_start_matches('-')
        .chars()
        .all(|c| c == '0' || c == '.')
    {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Real(f64),
    Int(i64),
    Bool(bool),
    Text(String),
}

impl Field {
    fn csv(&self) -> String {
        match self {
            Field::Real(v) => format_sig(*v),
            Field::Int(v) => v.to_string(),
            Field::Bool(b) => b.to_string(),
            Field::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Field::Real(v) => format_sig(*v)
                .parse::<f64>()
                .ok()
                .and_then(Number::from_f64)
                .map_or(Value::Null, Value::Number),
            Field::Int(v) => Value::from(*v),
            Field::Bool(b) => Value::Bool(*b),
            Field::Text(s) => Value::String(s.clone()),
        }
    }
}

impl From<f64> for Field {
    fn from(v: f64) -> Self {
        Field::Real(v)
    }
}

impl From<usize> for Field {
    fn from(v: usize) -> Self {
        Field::Int(v as i64)
    }
}

impl From<bool> for Field {
    fn from(v: bool) -> Self {
        Field::Bool(v)
    }
}

impl From<&str> for Field {
    fn from(v: &str) -> Self {
        Field::Text(v.to_string())
    }
}

impl From<String> for Field {
    fn from(v: String) -> Self {
        Field::Text(v)
    }
}

pub type Record = Vec<(&'static str, Field)>;

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Field>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: &'static str,
    pub inputs: Record,
    pub result: Record,
    pub table: Option<Table>,
    pub seed: u64,
}

fn object(record: &Record) -> Map<String, Value> {
    record
        .iter()
        .map(|(k, v)| (k.to_string(), v.json()))
        .collect()
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }

    pub fn to_json_value(&self) -> Value {
        let mut result = object(&self.result);
        if let Some(t) = &self.table {
            let rows = t
                .rows
                .iter()
                .map(|row| {
                    Value::Object(
                        t.columns
                            .iter()
                            .zip(row)
                            .map(|(c, f)| (c.to_string(), f.json()))
                            .collect(),
                    )
                })
                .collect();
            result.insert(t.name.to_string(), Value::Array(rows));
        }
        let mut meta = Map::new();
        meta.insert("version".into(), Value::from(env!("CARGO_PKG_VERSION")));
        meta.insert("seed".into(), Value::from(self.seed));

        let mut top = Map::new();
        top.insert("command".into(), Value::from(self.command));
        top.insert("inputs".into(), Value::Object(object(&self.inputs)));
        top.insert("result".into(), Value::Object(result));
        top.insert("meta".into(), Value::Object(meta));
        Value::Object(top)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json_value()).expect("plain values");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let mut line = |cells: Vec<String>| {
            out.push_str(&cells.join(","));
            out.push('\n');
        };
        match &self.table {
            Some(t) => {
                line(t.columns.iter().map(|c| c.to_string()).collect());
                for row in &t.rows {
                    line(row.iter().map(Field::csv).collect());
                }
            }
            None => {
                line(self.result.iter().map(|(k, _)| k.to_string()).collect());
                line(self.result.iter().map(|(_, v)| v.csv()).collect());
            }
        }
        out
    }
}
