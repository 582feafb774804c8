//! The output document and its three encodings.
//!
//! JSON is canonical. CSV and plain text are projections of `payload.rows`
//! only; the summary and metadata appear in JSON alone.

use std::fmt::Write as _;
use std::str::FromStr;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arith::ExactInt;
use crate::error::{Error, Result};
use crate::record::VerificationRecord;

pub type Row = IndexMap<String, Value>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Plain,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "plain" => Ok(Format::Plain),
            other => Err(Error::Parse(format!(
                "unknown format {other:?}; expected json, csv or plain"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub command: String,
    pub params: IndexMap<String, Value>,
    pub tool_version: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Payload {
    pub rows: Vec<Row>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub summary: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub meta: Meta,
    pub payload: Payload,
    /// Numeric column name to the column holding its `formula`/`oracle` marker.
    pub provenance: IndexMap<String, String>,
}

impl OutputDocument {
    pub fn new(command: &str, params: IndexMap<String, Value>) -> Self {
        OutputDocument {
            meta: Meta {
                command: command.to_string(),
                params,
                tool_version: super::TOOL_VERSION.to_string(),
            },
            payload: Payload::default(),
            provenance: IndexMap::new(),
        }
    }

    pub fn with_provenance(mut self, column: &str, marker_column: &str) -> Self {
        self.provenance.insert(column.into(), marker_column.into());
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialise");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("output document: {e}")))
    }

    /// Column names in order of first appearance across rows.
    pub fn columns(&self) -> Vec<String> {
        let mut cols: Vec<String> = Vec::new();
        for row in &self.payload.rows {
            for key in row.keys() {
                if !cols.contains(key) {
                    cols.push(key.clone());
                }
            }
        }
        cols
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Plain => self.to_plain(),
        }
    }

    pub fn to_csv(&self) -> String {
        let cols = self.columns();
        let mut out = String::new();
        let line = |cells: Vec<String>| cells.join(",") + "\n";
        out.push_str(&line(cols.iter().map(|c| csv_escape(c)).collect()));
        for row in &self.payload.rows {
            out.push_str(&line(
                cols.iter()
                    .map(|c| csv_escape(&cell_text(row.get(c))))
                    .collect(),
            ));
        }
        out
    }

    /// Tab-separated table with a `#`-prefixed header line.
    pub fn to_plain(&self) -> String {
        let cols = self.columns();
        let mut out = String::new();
        let _ = writeln!(out, "# {}", cols.join("\t"));
        for row in &self.payload.rows {
            let cells: Vec<String> = cols.iter().map(|c| cell_text(row.get(c))).collect();
            let _ = writeln!(out, "{}", cells.join("\t"));
        }
        out
    }
}

fn cell_text(value: Option<&Value>) -> String {
    match value {
        None | Some(Value::Null) => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(other) => other.to_string(),
    }
}

fn csv_escape(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

/// An exact integer as a JSON number of any size.
pub fn exact(value: &ExactInt) -> Value {
    Value::Number(
        value
            .to_string()
            .parse()
            .expect("integers are valid JSON numbers"),
    )
}

/// One verification record as a flat row.
pub fn record_row(record: &VerificationRecord) -> Row {
    let p = &record.params;
    let mut row = Row::new();
    row.insert("claim".into(), record.claim.clone().into());
    row.insert(
        "sigma".into(),
        p.sigma.as_ref().map(|s| s.to_string()).into(),
    );
    row.insert(
        "other_sigma".into(),
        p.other_sigma.as_ref().map(|s| s.to_string()).into(),
    );
    row.insert("k".into(), p.k.into());
    row.insert("n".into(), p.n.into());
    row.insert("i".into(), p.i.into());
    row.insert(
        "evaluation".into(),
        p.evaluation
            .as_ref()
            .map(|e| {
                e.iter()
                    .map(|a| a.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .into(),
    );
    row.insert("left".into(), exact(&record.left));
    row.insert("left_method".into(), record.left_method.as_str().into());
    row.insert("right".into(), exact(&record.right));
    row.insert("right_method".into(), record.right_method.as_str().into());
    row.insert(
        "verdict".into(),
        serde_json::to_value(record.verdict).unwrap(),
    );
    row.insert("known_discrepancy".into(), record.known_discrepancy.into());
    row.insert("note".into(), record.note.clone().into());
    row
}
