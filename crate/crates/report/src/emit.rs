use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::ReportError;
use crate::record::{format_float, ReportRecord};

pub const FIELDS: [&str; 10] = ["suite", "case", "lhs", "rhs", "residual", "pass", "method", "evals", "seed", "ms"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    JsonLines,
    Csv,
    SummaryText,
}

impl FromStr for Format {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json_lines" | "jsonl" => Ok(Format::JsonLines),
            "csv" => Ok(Format::Csv),
            "summary_text" | "summary" => Ok(Format::SummaryText),
            other => Err(ReportError::Config(format!("unknown format `{other}`"))),
        }
    }
}

fn json_line(r: &ReportRecord) -> String {
    let s = |x: &str| serde_json::Value::String(x.to_string());
    let f = |x: Option<f64>| x.and_then(serde_json::Number::from_f64).map_or(serde_json::Value::Null, Into::into);
    let values = [
        s(&r.suite),
        s(&r.case),
        r.lhs.to_json(),
        r.rhs.to_json(),
        f(r.residual),
        r.pass.into(),
        s(&r.method),
        r.evals.map_or(serde_json::Value::Null, Into::into),
        r.seed.into(),
        f(r.ms),
    ];
    let mut line = String::from("{");
    for (i, (k, v)) in FIELDS.iter().zip(values).enumerate() {
        if i > 0 {
            line.push(',');
        }
        let _ = write!(line, "\"{k}\":{v}");
    }
    line.push('}');
    line
}

fn csv_bytes(records: &[ReportRecord]) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let opt = |x: Option<String>| x.unwrap_or_default();
    // writing into a Vec cannot fail
    w.write_record(FIELDS).expect("in-memory write");
    for r in records {
        w.write_record([
            r.suite.clone(),
            r.case.clone(),
            opt(r.lhs.render()),
            opt(r.rhs.render()),
            opt(r.residual.map(format_float)),
            r.pass.to_string(),
            r.method.clone(),
            opt(r.evals.map(|e| e.to_string())),
            r.seed.to_string(),
            opt(r.ms.map(format_float)),
        ])
        .expect("in-memory write");
    }
    w.into_inner().expect("in-memory flush")
}

fn summary(records: &[ReportRecord]) -> String {
    let mut out = String::new();
    let mut order: Vec<&str> = Vec::new();
    for r in records {
        if !order.contains(&r.suite.as_str()) {
            order.push(&r.suite);
        }
    }
    for suite in &order {
        let (pass, total) = records
            .iter()
            .filter(|r| r.suite == *suite)
            .fold((0, 0), |(p, t), r| (p + usize::from(r.pass), t + 1));
        let _ = writeln!(out, "{suite}: {pass}/{total} passed");
    }
    for r in records.iter().filter(|r| !r.pass) {
        let detail = r.residual.map(format_float).or_else(|| r.lhs.render()).unwrap_or_default();
        let _ = writeln!(out, "FAIL {} {} ({})", r.suite, r.case, detail);
    }
    let passed = records.iter().filter(|r| r.pass).count();
    let _ = writeln!(out, "total: {passed}/{} passed", records.len());
    out
}

/// Serializes records. JSON lines keep the field order of [`FIELDS`]; CSV mirrors it.
pub fn emit_report(records: &[ReportRecord], format: Format) -> Vec<u8> {
    match format {
        Format::JsonLines => {
            let mut out = String::new();
            for r in records {
                out.push_str(&json_line(r));
                out.push('\n');
            }
            out.into_bytes()
        }
        Format::Csv => csv_bytes(records),
        Format::SummaryText => summary(records).into_bytes(),
    }
}
