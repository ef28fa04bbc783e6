//! Records and their CSV / JSON-lines encodings.

use std::io::Write;

use serde_json::{Map, Number, Value};

use crate::{CliError, Format};

/// Scientific notation with 12 significant digits and a lowercase `e`.
pub fn fmt_num(v: f64) -> String {
    if v == 0.0 {
        // no "-0"
        "0.00000000000e0".into()
    } else if v.is_finite() {
        format!("{v:.11e}")
    } else if v.is_nan() {
        "nan".into()
    } else if v > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Field {
    Num(f64),
    Int(i64),
    Text(String),
    Bool(bool),
    Missing,
}

impl Field {
    pub fn opt_num(v: Option<f64>) -> Field {
        v.map_or(Field::Missing, Field::Num)
    }

    fn csv(&self) -> String {
        match self {
            Field::Num(v) => fmt_num(*v),
            Field::Int(i) => i.to_string(),
            Field::Text(s) => s.clone(),
            Field::Bool(b) => b.to_string(),
            Field::Missing => String::new(),
        }
    }

    /// Numbers go through the CSV text so both formats carry the same digits.
    fn json(&self) -> Value {
        match self {
            Field::Num(v) => fmt_num(*v)
                .parse::<f64>()
                .ok()
                .and_then(Number::from_f64)
                .map_or(Value::Null, Value::Number),
            Field::Int(i) => Value::from(*i),
            Field::Text(s) => Value::from(s.as_str()),
            Field::Bool(b) => Value::from(*b),
            Field::Missing => Value::Null,
        }
    }
}

impl From<f64> for Field {
    fn from(v: f64) -> Self {
        Field::Num(v)
    }
}

impl From<usize> for Field {
    fn from(v: usize) -> Self {
        Field::Int(v as i64)
    }
}

impl From<&str> for Field {
    fn from(s: &str) -> Self {
        Field::Text(s.to_string())
    }
}

impl From<String> for Field {
    fn from(s: String) -> Self {
        Field::Text(s)
    }
}

impl From<bool> for Field {
    fn from(b: bool) -> Self {
        Field::Bool(b)
    }
}

/// One output row: column names with values, in column order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Record(pub Vec<(&'static str, Field)>);

impl Record {
    pub fn new() -> Self {
        Record::default()
    }

    pub fn with(mut self, key: &'static str, value: impl Into<Field>) -> Self {
        self.0.push((key, value.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Field> {
        self.0.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    pub fn keys(&self) -> Vec<&'static str> {
        self.0.iter().map(|(k, _)| *k).collect()
    }
}

/// CSV takes its header from the first record; JSON is one object per line.
pub fn write_records<W: Write>(records: &[Record], format: Format, mut out: W) -> Result<(), CliError> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            if let Some(first) = records.first() {
                w.write_record(first.keys())?;
            }
            for r in records {
                w.write_record(r.0.iter().map(|(_, v)| v.csv()))?;
            }
            w.flush()?;
        }
        Format::Json => {
            for r in records {
                let obj: Map<String, Value> =
                    r.0.iter().map(|(k, v)| (k.to_string(), v.json())).collect();
                serde_json::to_writer(&mut out, &obj).map_err(std::io::Error::from)?;
                out.write_all(b"\n")?;
            }
            out.flush()?;
        }
    }
    Ok(())
}
