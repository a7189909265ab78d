//! Report emission. JSON wraps the result with version, inputs and runtime; CSV holds only
//! deterministic columns so identical runs give identical bytes.

use std::io::Write;

use serde::Serialize;
use serde_json::Value;

use crate::config::Format;

pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub text: String,
}

impl Report {
    pub fn new<T: Serialize>(command: &'static str, inputs: Value, result: &T) -> Self {
        Report {
            command,
            inputs,
            result: serde_json::to_value(result).expect("reports serialize"),
            header: Vec::new(),
            rows: Vec::new(),
            text: String::new(),
        }
    }

    pub fn csv(mut self, header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        self.header = header;
        self.rows = rows;
        self
    }

    pub fn text(mut self, text: impl Into<String>) -> Self {
        self.text = text.into();
        self
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    artifact_version: &'a str,
    command: &'a str,
    inputs: &'a Value,
    runtime_seconds: f64,
    result: &'a Value,
}

pub fn emit(report: &Report, format: Format, runtime_seconds: f64, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => {
            let env = Envelope {
                artifact_version: pschen_core::verify::ARTIFACT_VERSION,
                command: report.command,
                inputs: &report.inputs,
                runtime_seconds,
                result: &report.result,
            };
            serde_json::to_writer_pretty(&mut *out, &env)?;
            writeln!(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(&report.header)?;
            for r in &report.rows {
                w.write_record(r)?;
            }
            w.flush()
        }
        Format::Text => {
            write!(out, "{}", report.text)?;
            if !report.text.ends_with('\n') {
                writeln!(out)?;
            }
            Ok(())
        }
    }
}

/// Shortest decimal that parses back to the same float.
pub fn num(x: f64) -> String {
    format!("{x:?}")
}
