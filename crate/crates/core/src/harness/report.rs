//! JSON and CSV serialization of verification reports.

use std::io::Write;
use std::str::FromStr;

use serde::Serialize;

use super::verify::{ReportRow, VerificationReport};
use crate::error::{Error, Result};
use crate::formulas::{FormulaOutcome, FormulaValue};
use crate::solver::DominationCertificate;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            _ => Err(format!("unknown report format {s:?} (expected json or csv)")),
        }
    }
}

/// Full report, certificates included.
pub fn write_json<W: Write>(report: &VerificationReport, mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, report).map_err(|e| io_err(e.into()))?;
    writeln!(out).map_err(io_err)
}

#[derive(Serialize)]
struct CsvRow<'a> {
    spec: &'a str,
    tags: String,
    order: usize,
    profile: String,
    dom_graph: usize,
    dom_costanzo: String,
    dom_corollary: String,
    proper_vertices: usize,
    components: usize,
    components_predicted: String,
    gamma: String,
    gamma_formula: String,
    gamma_case: &'a str,
    gamma_strong: String,
    gamma_strong_formula: String,
    gamma_strong_case: &'a str,
    nodes_explored: u64,
    verdict: &'static str,
    unexpected: bool,
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(String::new, |v| v.to_string())
}

fn cert(c: &Option<DominationCertificate>) -> String {
    match c {
        None => String::new(),
        Some(c) => c.size().map_or_else(|| "none".into(), |s| s.to_string()),
    }
}

fn formula(f: &Option<FormulaOutcome>) -> String {
    match f.as_ref().map(|f| &f.value) {
        None => String::new(),
        Some(FormulaValue::Number(v)) => v.to_string(),
        Some(FormulaValue::NoTotalDominatingSet) => "none".into(),
        Some(FormulaValue::NotCovered(_)) => "not_covered".into(),
    }
}

fn case(f: &Option<FormulaOutcome>) -> &str {
    f.as_ref().map_or("", |f| f.case_tag)
}

fn flatten(r: &ReportRow) -> CsvRow<'_> {
    CsvRow {
        spec: &r.spec,
        tags: r.tags.iter().cloned().collect::<Vec<_>>().join(";"),
        order: r.order,
        profile: r.profile.clone().or_else(|| r.profile_error.clone()).unwrap_or_default(),
        dom_graph: r.dom.graph,
        dom_costanzo: opt(r.dom.costanzo),
        dom_corollary: opt(r.dom.corollary),
        proper_vertices: r.proper_vertices,
        components: r.components_actual,
        components_predicted: formula(&r.components_predicted),
        gamma: cert(&r.gamma_oracle),
        gamma_formula: formula(&r.gamma_formula),
        gamma_case: case(&r.gamma_formula),
        gamma_strong: cert(&r.gamma_strong_oracle),
        gamma_strong_formula: formula(&r.gamma_strong_formula),
        gamma_strong_case: case(&r.gamma_strong_formula),
        nodes_explored: r.gamma_oracle.iter().chain(&r.gamma_strong_oracle).map(|c| c.nodes_explored).sum(),
        verdict: r.verdict.as_str(),
        unexpected: r.unexpected,
    }
}

/// One line per group with scalar columns only.
pub fn write_csv<W: Write>(report: &VerificationReport, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in &report.rows {
        w.serialize(flatten(row)).map_err(|e| io_err(e.into()))?;
    }
    w.flush().map_err(io_err)
}

fn io_err(source: std::io::Error) -> Error {
    Error::Io {
        path: "<report>".into(),
        source,
    }
}
