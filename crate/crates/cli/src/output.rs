use std::io::Write;
use std::process::ExitCode;

use bottcalc::Error;
use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

/// Version tag carried by every json document.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Failed,
    Truncated,
}

/// One command's result in all three renderings.
pub struct Report {
    pub kind: &'static str,
    pub text: String,
    pub json: Value,
    pub csv_header: Vec<&'static str>,
    pub csv_rows: Vec<Vec<String>>,
    pub status: Status,
}

impl Report {
    pub fn new(kind: &'static str, data: &impl Serialize) -> Self {
        Report {
            kind,
            text: String::new(),
            json: serde_json::to_value(data).expect("report serializes"),
            csv_header: Vec::new(),
            csv_rows: Vec::new(),
            status: Status::Ok,
        }
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    pub fn emit(self, format: Format) -> ExitCode {
        let mut out = std::io::stdout().lock();
        let res = match format {
            Format::Text => out.write_all(self.text.as_bytes()),
            Format::Json => {
                let doc = serde_json::json!({
                    "schema": format!("bottcalc.{}/{SCHEMA_VERSION}", self.kind),
                    "status": match self.status {
                        Status::Ok => "ok",
                        Status::Failed => "failed",
                        Status::Truncated => "truncated",
                    },
                    "result": self.json,
                });
                let mut s = serde_json::to_string_pretty(&doc).expect("json");
                s.push('\n');
                out.write_all(s.as_bytes())
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut out);
                let mut res = w.write_record(&self.csv_header);
                for row in &self.csv_rows {
                    res = res.and_then(|_| w.write_record(row));
                }
                res.and_then(|_| w.flush().map_err(Into::into)).map_err(std::io::Error::other)
            }
        };
        if let Err(e) = res {
            if e.kind() != std::io::ErrorKind::BrokenPipe {
                eprintln!("error: cannot write report: {e}");
                return ExitCode::from(1);
            }
        }
        ExitCode::from(match self.status {
            Status::Ok => 0,
            Status::Failed => 1,
            Status::Truncated => 3,
        })
    }
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ResourceLimit { .. } | Error::Overflow { .. } => 3,
        _ => 2,
    }
}
