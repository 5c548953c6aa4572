//! Command results and their text, CSV and JSON renderings.

use std::io::Write;

use clap::ValueEnum;
use rookring::Field;
use serde_json::{json, Value};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// The outcome of one command. Every rendering starts with the same header
/// data: command, `n`, field and record count.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub n: usize,
    pub field: Field,
    pub count: usize,
    /// Data lines for the text format, after the header.
    pub lines: Vec<String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub data: Value,
}

impl Report {
    pub fn new(command: impl Into<String>, n: usize, field: Field) -> Self {
        Report {
            command: command.into(),
            n,
            field,
            count: 0,
            lines: Vec::new(),
            columns: Vec::new(),
            rows: Vec::new(),
            data: Value::Null,
        }
    }

    pub fn header(&self) -> String {
        format!("# {} n={} field={} count={}", self.command, self.n, self.field, self.count)
    }

    pub fn render(&self, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
        match format {
            Format::Text => {
                writeln!(out, "{}", self.header())?;
                for line in &self.lines {
                    writeln!(out, "{line}")?;
                }
            }
            Format::Json => {
                let doc = json!({
                    "command": self.command,
                    "n": self.n,
                    "field": self.field.to_string(),
                    "count": self.count,
                    "data": self.data,
                });
                serde_json::to_writer_pretty(&mut *out, &doc)?;
                writeln!(out)?;
            }
            Format::Csv => {
                if self.columns.is_empty() {
                    return Err(CliError::Usage(format!("`{}` has no CSV form; use text or json", self.command)));
                }
                writeln!(out, "{}", self.header())?;
                let mut w = csv::Writer::from_writer(&mut *out);
                w.write_record(&self.columns)?;
                for row in &self.rows {
                    w.write_record(row)?;
                }
                w.flush()?;
            }
        }
        Ok(())
    }
}
