// Copyright 2026 commonbath contributors
// SPDX-License-Identifier: Apache-2.0

//! Table assembly and output-target handling.
//!
//! CSV output carries full double precision (17 significant digits),
//! a header row, comma delimiters and LF line endings, so repeated runs
//! are bitwise identical.

use crate::CliError;
use std::io::Write;
use std::path::{Path, PathBuf};

/// One cell of an output table.
#[derive(Clone, Debug)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Bool(bool),
    Missing,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => format_full(*v),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Missing => String::new(),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Cell::Int(v) => serde_json::json!(v),
            Cell::Float(v) => serde_json::json!(v),
            Cell::Text(s) => serde_json::json!(s),
            Cell::Bool(b) => serde_json::json!(b),
            Cell::Missing => serde_json::Value::Null,
        }
    }
}

/// 17 significant digits: enough to round-trip any f64.
pub fn format_full(v: f64) -> String {
    if v == f64::INFINITY {
        return "inf".to_string();
    }
    // Normalize -0.0 so outputs stay visually stable.
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.16e}")
}

pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table {
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let fields: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: serde_json::Map<String, serde_json::Value> = self
                    .columns
                    .iter()
                    .zip(row.iter())
                    .map(|(name, cell)| (name.clone(), cell.json()))
                    .collect();
                serde_json::Value::Object(obj)
            })
            .collect();
        serde_json::json!({ "columns": self.columns, "rows": rows })
    }
}

/// Resolve the output destination: an explicit path wins; otherwise
/// $COMMONBATH_OUT_DIR/<default_name> when the variable is set; otherwise
/// stdout.
pub fn write_output(
    explicit: &Option<PathBuf>,
    default_name: &str,
    content: &str,
) -> Result<(), CliError> {
    let target: Option<PathBuf> = match explicit {
        Some(path) => Some(path.clone()),
        None => std::env::var_os("COMMONBATH_OUT_DIR")
            .map(|dir| Path::new(&dir).join(default_name)),
    };
    match target {
        Some(path) => {
            if let Some(parent) = path.parent() {
                if !parent.as_os_str().is_empty() && !parent.exists() {
                    std::fs::create_dir_all(parent)?;
                }
            }
            std::fs::write(&path, content)?;
            eprintln!("wrote {}", path.display());
        }
        None => {
            std::io::stdout().write_all(content.as_bytes())?;
        }
    }
    Ok(())
}
