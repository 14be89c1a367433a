//! Tabular output shared by the sampling commands: CSV with paired
//! `Re_`/`Im_` columns, or JSON with `{"re", "im"}` objects.

use std::str::FromStr;

use num_complex::Complex64;
use serde_json::{Map, Number, Value};

/// Version tag written into every document.
pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Cell {
    Int(i64),
    Real(f64),
    Complex(Complex64),
}

/// `{:.16e}`: 17 significant digits, enough to reparse the same `f64`.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// A JSON number carrying exactly the [`format_f64`] digits; non-finite
/// values become `null`.
pub fn json_f64(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    Number::from_str(&format_f64(x)).map_or(Value::Null, Value::Number)
}

pub fn json_complex(z: Complex64) -> Value {
    let mut m = Map::new();
    m.insert("re".into(), json_f64(z.re));
    m.insert("im".into(), json_f64(z.im));
    Value::Object(m)
}

/// Rewrite every non-integer number in `v` with [`json_f64`].
pub fn normalize_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if !(n.is_i64() || n.is_u64()) => n.as_f64().map_or(Value::Null, json_f64),
        Value::Array(a) => Value::Array(a.into_iter().map(normalize_floats).collect()),
        Value::Object(m) => Value::Object(m.into_iter().map(|(k, x)| (k, normalize_floats(x))).collect()),
        other => other,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn with_columns(columns: Vec<String>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let Some(first) = self.rows.first() else {
            w.write_record(&self.columns)?;
            return Ok(into_string(w));
        };
        let mut header = Vec::new();
        for (name, cell) in self.columns.iter().zip(first) {
            match cell {
                Cell::Complex(_) => {
                    header.push(format!("Re_{name}"));
                    header.push(format!("Im_{name}"));
                }
                _ => header.push(name.clone()),
            }
        }
        w.write_record(&header)?;
        for row in &self.rows {
            let mut rec = Vec::with_capacity(header.len());
            for cell in row {
                match cell {
                    Cell::Int(i) => rec.push(i.to_string()),
                    Cell::Real(x) => rec.push(format_f64(*x)),
                    Cell::Complex(z) => {
                        rec.push(format_f64(z.re));
                        rec.push(format_f64(z.im));
                    }
                }
            }
            w.write_record(&rec)?;
        }
        Ok(into_string(w))
    }

    pub fn to_json_records(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let mut m = Map::new();
                    for (name, cell) in self.columns.iter().zip(row) {
                        let v = match cell {
                            Cell::Int(i) => Value::from(*i),
                            Cell::Real(x) => json_f64(*x),
                            Cell::Complex(z) => json_complex(*z),
                        };
                        m.insert(name.clone(), v);
                    }
                    Value::Object(m)
                })
                .collect(),
        )
    }
}

fn into_string(w: csv::Writer<Vec<u8>>) -> String {
    // the writer only ever receives UTF-8 text
    w.into_inner()
        .map(|bytes| String::from_utf8_lossy(&bytes).into_owned())
        .unwrap_or_default()
}

/// `{"schema", "version", "command", "config", "records"}`.
pub fn document(command: &str, config: Value, records: Value) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), Value::from(format!("dsmaxwell.{command}/{SCHEMA_VERSION}")));
    m.insert("version".into(), Value::from(env!("CARGO_PKG_VERSION")));
    m.insert("command".into(), Value::from(command));
    m.insert("config".into(), normalize_floats(config));
    m.insert("records".into(), records);
    Value::Object(m)
}
