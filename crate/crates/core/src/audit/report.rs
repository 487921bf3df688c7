//! Byte-stable serialization of [`AuditReport`].
//!
//! JSON-lines layout: one `meta` record, one record per claim result, then a
//! `timing` trailer. Everything before the trailer is the deterministic body.
//! CSV carries the fixed header, one row per result and a `#` timing trailer.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::{AuditReport, ReportMetadata, Timing};
use crate::error::Error;

pub const CSV_HEADER: &str = "claim,a_lo,a_hi,status,checked,witness_count";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    JsonLines,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "json" | "jsonl" => Ok(ReportFormat::JsonLines),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(Error::InvalidArgument(format!(
                "format must be `json` or `csv`, got `{other}`"
            ))),
        }
    }
}

#[derive(Serialize)]
struct MetaRecord<'a> {
    record: &'static str,
    #[serde(flatten)]
    meta: &'a ReportMetadata,
}

#[derive(Serialize)]
struct TimingRecord<'a> {
    record: &'static str,
    #[serde(flatten)]
    timing: &'a Timing,
}

fn json_line(out: &mut String, value: &impl Serialize) {
    out.push_str(&serde_json::to_string(value).expect("report records serialize"));
    out.push('\n');
}

pub fn emit_report(report: &AuditReport, format: ReportFormat) -> String {
    let mut out = String::new();
    match format {
        ReportFormat::JsonLines => {
            json_line(
                &mut out,
                &MetaRecord {
                    record: "meta",
                    meta: &report.metadata,
                },
            );
            for r in &report.results {
                json_line(&mut out, r);
            }
            json_line(
                &mut out,
                &TimingRecord {
                    record: "timing",
                    timing: &report.timing,
                },
            );
        }
        ReportFormat::Csv => {
            out.push_str(CSV_HEADER);
            out.push('\n');
            for r in &report.results {
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.claim,
                    r.a_lo,
                    r.a_hi,
                    r.status.as_str(),
                    r.checked_count,
                    r.witness_count
                )
                .unwrap();
            }
            writeln!(
                out,
                "# jobs={} elapsed_ms={}",
                report.timing.jobs, report.timing.elapsed_ms
            )
            .unwrap();
        }
    }
    out
}

/// Drops the timing trailer (the last line) from emitted report text.
pub fn deterministic_body(text: &str) -> &str {
    let trimmed = text.strip_suffix('\n').unwrap_or(text);
    match trimmed.rfind('\n') {
        Some(i) => &text[..=i],
        None => "",
    }
}
