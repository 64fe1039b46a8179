//! Tables and their CSV / JSON rendering. Floats are always written with 17
//! significant digits in exponent form so that output is byte-stable.

use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use serde_json::{Map, Number, Value};

use crate::config::{Format, MetaValue};
use crate::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Missing,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Missing, Cell::Float)
    }
}

pub fn fmt_float(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        format!("{v}")
    }
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Float(f) => fmt_float(*f),
            Cell::Text(s) => s.clone(),
            Cell::Missing => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(i) => Value::from(*i),
            Cell::Float(f) => float_json(*f),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Missing => Value::Null,
        }
    }
}

fn float_json(v: f64) -> Value {
    if v.is_finite() {
        Value::Number(Number::from_str(&fmt_float(v)).expect("exponent form is valid JSON"))
    } else {
        Value::Null
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub footer: Vec<(&'static str, Cell)>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Self { columns: columns.to_vec(), ..Self::default() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn foot(&mut self, key: &'static str, value: impl Into<Cell>) {
        self.footer.push((key, value.into()));
    }

    pub fn column(&self, name: &str) -> Option<Vec<&Cell>> {
        let i = self.columns.iter().position(|c| *c == name)?;
        Some(self.rows.iter().map(|r| &r[i]).collect())
    }

    pub fn footer_value(&self, key: &str) -> Option<&Cell> {
        self.footer.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }
}

fn meta_json(meta: &[(&'static str, MetaValue)]) -> Value {
    let mut m = Map::new();
    for (k, v) in meta {
        let v = match v {
            MetaValue::Int(i) => Value::from(*i),
            MetaValue::Float(f) => float_json(*f),
            MetaValue::Text(s) => Value::from(s.as_str()),
            MetaValue::List(xs) => Value::Array(xs.iter().map(|x| float_json(*x)).collect()),
        };
        m.insert((*k).to_string(), v);
    }
    Value::Object(m)
}

fn meta_text(v: &MetaValue) -> String {
    match v {
        MetaValue::Int(i) => i.to_string(),
        MetaValue::Float(f) => fmt_float(*f),
        MetaValue::Text(s) => s.clone(),
        MetaValue::List(xs) => xs.iter().map(|x| fmt_float(*x)).collect::<Vec<_>>().join(";"),
    }
}

/// CSV: `#`-prefixed meta lines, the header row, data rows, then `#`-prefixed
/// footer lines.
pub fn render_csv(table: &Table, meta: &[(&'static str, MetaValue)]) -> Result<Vec<u8>, CliError> {
    let mut out = Vec::new();
    for (k, v) in meta {
        writeln!(out, "# {k}={}", meta_text(v))?;
    }
    {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(&mut out);
        w.write_record(&table.columns)?;
        for row in &table.rows {
            w.write_record(row.iter().map(Cell::text))?;
        }
        w.flush()?;
    }
    for (k, v) in &table.footer {
        writeln!(out, "# {k}={}", v.text())?;
    }
    Ok(out)
}

pub fn render_json(table: &Table, meta: &[(&'static str, MetaValue)]) -> Result<Vec<u8>, CliError> {
    let rows = table
        .rows
        .iter()
        .map(|r| {
            let mut m = Map::new();
            for (c, v) in table.columns.iter().zip(r) {
                m.insert((*c).to_string(), v.json());
            }
            Value::Object(m)
        })
        .collect();
    let mut footer = Map::new();
    for (k, v) in &table.footer {
        footer.insert((*k).to_string(), v.json());
    }
    let mut doc = Map::new();
    doc.insert("meta".into(), meta_json(meta));
    doc.insert("rows".into(), Value::Array(rows));
    doc.insert("footer".into(), Value::Object(footer));
    let mut out = serde_json::to_vec_pretty(&Value::Object(doc))?;
    out.push(b'\n');
    Ok(out)
}

pub fn render(table: &Table, meta: &[(&'static str, MetaValue)], format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Csv => render_csv(table, meta),
        Format::Json => render_json(table, meta),
    }
}

/// Write through a temporary file in the target directory and rename, so a
/// failed run never leaves a partial file behind.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| CliError::Io(e.error))?;
    Ok(())
}
