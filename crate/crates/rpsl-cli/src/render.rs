//! Output rendering.
//!
//! Text goes to stderr for diagnostics and errors, stdout for results, with
//! ANSI color when the stream is a terminal (override with `RPSL_COLOR=0|1`).
//! JSON mode prints exactly one document per invocation on stdout; the
//! top-level key tells a consumer what it got (`diagnostics`, `spec`, `plan`).

use std::io::IsTerminal;

use serde::Serialize;

use rpsl_core::diag::Severity;
use rpsl_core::exec::{ExecutionReport, Verdict};
use rpsl_core::query::{QueryResult, QueryValue};

use crate::app::{Format, Unit};
use crate::scene::PoseDoc;

pub struct Renderer {
    format: Format,
    color: bool,
}

impl Renderer {
    pub fn new(format: Format) -> Self {
        let color = match std::env::var("RPSL_COLOR").as_deref() {
            Ok("0") => false,
            Ok("1") => true,
            _ => std::io::stdout().is_terminal() && std::io::stderr().is_terminal(),
        };
        Renderer { format, color }
    }

    fn paint(&self, code: &str, text: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_string()
        }
    }

    pub fn error(&self, message: &str) {
        eprintln!("{}: {message}", self.paint("1;31", "error"));
    }

    pub fn diagnostics(&self, unit: &Unit) {
        match self.format {
            Format::Json => {
                let doc = DiagnosticsDoc {
                    diagnostics: unit
                        .diagnostics
                        .iter()
                        .map(|d| DiagnosticDoc {
                            severity: d.severity.to_string(),
                            code: d.code,
                            message: &d.message,
                            file: file_name(unit, d.span.file.0),
                            line: d.span.line,
                            column: d.span.column,
                        })
                        .collect(),
                };
                print_doc(&doc);
            }
            Format::Text => {
                for d in &unit.diagnostics {
                    let color = match d.severity {
                        Severity::Error => "1;31",
                        Severity::Warning => "1;33",
                        Severity::Note => "1;36",
                    };
                    eprintln!(
                        "{}:{}:{}: {}[{}]: {}",
                        file_name(unit, d.span.file.0),
                        d.span.line,
                        d.span.column,
                        self.paint(color, &d.severity.to_string()),
                        d.code,
                        d.message
                    );
                }
            }
        }
    }

    pub fn query_result(&self, result: &QueryResult) {
        match self.format {
            Format::Json => print_doc(&result_doc(result)),
            Format::Text => self.query_result_text(result),
        }
    }

    fn query_result_text(&self, result: &QueryResult) {
        match &result.value {
            QueryValue::Amount { count } => {
                println!("{}: Amount = {count}", result.spec);
            }
            QueryValue::Poses { poses } => {
                println!(
                    "{}: Pose, {} of {} matches carry a pose",
                    result.spec,
                    poses.len(),
                    result.matched_ids.len()
                );
                for (id, p) in poses {
                    println!(
                        "  {id}: ({}, {}, {}) mm, q ({}, {}, {}, {})",
                        p.x, p.y, p.z, p.qx, p.qy, p.qz, p.qw
                    );
                }
            }
        }
        if !result.matched_ids.is_empty() {
            println!("matched: {}", result.matched_ids.join(", "));
        }
        for note in &result.notes {
            println!("note: {note}");
        }
    }

    pub fn execution_report(&self, plan: &str, report: &ExecutionReport) {
        match self.format {
            Format::Json => {
                let doc = ReportDoc {
                    plan,
                    entries: report.entries.iter().map(entry_doc).collect(),
                };
                print_doc(&doc);
            }
            Format::Text => {
                for e in &report.entries {
                    self.report_entry_text(e);
                }
            }
        }
    }

    fn report_entry_text(&self, e: &rpsl_core::exec::ReportEntry) {
        let stamps = match e.response_stamp_ms {
            Some(resp) => format!(" [request {}ms, response {resp}ms]", e.request_stamp_ms),
            None => String::new(),
        };
        match &e.verdict {
            Verdict::Completed(result) => {
                let value = match &result.value {
                    QueryValue::Amount { count } => format!("Amount = {count}"),
                    QueryValue::Poses { poses } => {
                        let n = poses.len();
                        format!("Pose, {n} pose{}", if n == 1 { "" } else { "s" })
                    }
                };
                println!(
                    "{}: {} ({value}){stamps}",
                    e.spec,
                    self.paint("32", "Completed")
                );
                for note in &result.notes {
                    println!("  note: {note}");
                }
            }
            Verdict::DeadlineMissed {
                deadline_ms,
                elapsed_ms,
            } => {
                println!(
                    "{}: {} (elapsed {elapsed_ms}ms, deadline {deadline_ms}ms){stamps}",
                    e.spec,
                    self.paint("1;31", "DeadlineMissed")
                );
            }
            Verdict::Skipped { blocked_on } => {
                println!(
                    "{}: {} (blocked on {blocked_on})",
                    e.spec,
                    self.paint("1;33", "Skipped")
                );
            }
            Verdict::Failed { reason } => {
                println!("{}: {} ({reason})", e.spec, self.paint("1;31", "Failed"));
            }
        }
    }
}

fn file_name(unit: &Unit, id: u32) -> String {
    unit.files
        .get(id as usize)
        .map(|p| p.display().to_string())
        .unwrap_or_else(|| String::from("<unknown>"))
}

fn print_doc<T: Serialize>(doc: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(doc).expect("documents serialize")
    );
}

#[derive(Serialize)]
struct DiagnosticsDoc<'a> {
    diagnostics: Vec<DiagnosticDoc<'a>>,
}

#[derive(Serialize)]
struct DiagnosticDoc<'a> {
    severity: String,
    code: &'a str,
    message: &'a str,
    file: String,
    line: u32,
    column: u32,
}

#[derive(Serialize)]
struct ResultDoc<'a> {
    spec: &'a str,
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    poses: Option<Vec<PoseEntryDoc<'a>>>,
    matched_ids: &'a [String],
    notes: &'a [String],
}

#[derive(Serialize)]
struct PoseEntryDoc<'a> {
    id: &'a str,
    pose: PoseDoc,
}

fn result_doc(result: &QueryResult) -> ResultDoc<'_> {
    let (kind, count, poses) = match &result.value {
        QueryValue::Amount { count } => ("Amount", Some(*count), None),
        QueryValue::Poses { poses } => (
            "Pose",
            None,
            Some(
                poses
                    .iter()
                    .map(|(id, p)| PoseEntryDoc {
                        id,
                        pose: PoseDoc::from(*p),
                    })
                    .collect(),
            ),
        ),
    };
    ResultDoc {
        spec: &result.spec,
        kind,
        count,
        poses,
        matched_ids: &result.matched_ids,
        notes: &result.notes,
    }
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    plan: &'a str,
    entries: Vec<EntryDoc<'a>>,
}

#[derive(Serialize)]
struct EntryDoc<'a> {
    spec: &'a str,
    verdict: &'static str,
    request_stamp_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    response_stamp_ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<ResultDoc<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    deadline_ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    blocked_on: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'a str>,
}

fn entry_doc(e: &rpsl_core::exec::ReportEntry) -> EntryDoc<'_> {
    let mut doc = EntryDoc {
        spec: &e.spec,
        verdict: "",
        request_stamp_ms: e.request_stamp_ms,
        response_stamp_ms: e.response_stamp_ms,
        result: None,
        deadline_ms: None,
        elapsed_ms: None,
        blocked_on: None,
        reason: None,
    };
    match &e.verdict {
        Verdict::Completed(result) => {
            doc.verdict = "Completed";
            doc.result = Some(result_doc(result));
        }
        Verdict::DeadlineMissed {
            deadline_ms,
            elapsed_ms,
        } => {
            doc.verdict = "DeadlineMissed";
            doc.deadline_ms = Some(*deadline_ms);
            doc.elapsed_ms = Some(*elapsed_ms);
        }
        Verdict::Skipped { blocked_on } => {
            doc.verdict = "Skipped";
            doc.blocked_on = Some(blocked_on);
        }
        Verdict::Failed { reason } => {
            doc.verdict = "Failed";
            doc.reason = Some(reason);
        }
    }
    doc
}
