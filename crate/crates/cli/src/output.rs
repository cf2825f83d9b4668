use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// A command's result: a rectangular table plus the structured JSON form.
pub struct Report {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub json: Value,
    /// Lines printed after the table in table format only.
    pub notes: Vec<String>,
}

impl Report {
    pub fn new<S: Serialize>(headers: &[&str], rows: Vec<Vec<String>>, json: &S) -> Result<Self> {
        Ok(Report {
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows,
            json: serde_json::to_value(json)?,
            notes: vec![],
        })
    }

    pub fn note(mut self, line: impl Into<String>) -> Self {
        self.notes.push(line.into());
        self
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.json)?;
                writeln!(out)?;
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.headers)?;
                for r in &self.rows {
                    w.write_record(r)?;
                }
                w.flush()?;
            }
            Format::Table => {
                let mut widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
                for r in &self.rows {
                    for (w, cell) in widths.iter_mut().zip(r) {
                        *w = (*w).max(cell.chars().count());
                    }
                }
                let line = |cells: &[String]| {
                    cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:<w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                        .trim_end()
                        .to_string()
                };
                writeln!(out, "{}", line(&self.headers))?;
                writeln!(out, "{}", widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().join("  "))?;
                for r in &self.rows {
                    writeln!(out, "{}", line(r))?;
                }
                for n in &self.notes {
                    writeln!(out, "{n}")?;
                }
            }
        }
        Ok(())
    }
}

/// Reproducibility record written to stderr with `--manifest`.
#[derive(Serialize)]
pub struct RunManifest {
    pub subcommand: String,
    pub parameters: Vec<String>,
    pub tool_version: &'static str,
    pub elapsed_ms: u128,
    pub rows: usize,
}
