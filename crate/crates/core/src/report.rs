//! Tidy long-format tables from scan files, for external plotting.

use num_complex::Complex64;

use crate::domain::SignConvention;
use crate::error::{Error, Result};
use crate::scan::{format_real, ScanOutput, ScanRow, CSV_HEADER};

pub const TIDY_HEADER: [&str; 7] = ["sign_convention", "n", "alpha", "C", "D", "metric", "value"];

pub const METRICS: [&str; 4] = ["worst_margin", "condition_holds", "empirical_verdict", "nonvanishing_ok"];

fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

/// Parses scan output in either format. Whitespace-only input is an empty scan.
pub fn parse_scan(text: &str) -> Result<Vec<ScanRow>> {
    let trimmed = text.trim_start();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    if trimmed.starts_with('{') {
        let out: ScanOutput = serde_json::from_str(text).map_err(|e| malformed(format!("scan JSON: {e}")))?;
        return Ok(out.rows);
    }
    parse_csv(text)
}

fn parse_csv(text: &str) -> Result<Vec<ScanRow>> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let headers = rdr.headers().map_err(|e| malformed(e.to_string()))?.clone();
    if headers.iter().ne(CSV_HEADER.iter().copied()) {
        return Err(malformed(format!("unexpected CSV header {:?}", headers.iter().collect::<Vec<_>>())));
    }
    let mut rows = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| malformed(e.to_string()))?;
        let line = i + 2;
        let field = |k: usize| rec.get(k).unwrap_or("");
        let num = |k: usize| -> Result<f64> {
            field(k).parse::<f64>().map_err(|_| malformed(format!("line {line}: bad {} {:?}", CSV_HEADER[k], field(k))))
        };
        let opt = |k: usize| -> Result<Option<f64>> {
            if field(k).is_empty() {
                Ok(None)
            } else {
                num(k).map(Some)
            }
        };
        let flag = |k: usize| -> Result<bool> {
            field(k)
                .parse::<bool>()
                .map_err(|_| malformed(format!("line {line}: bad {} {:?}", CSV_HEADER[k], field(k))))
        };
        let n = field(0).parse::<usize>().map_err(|_| malformed(format!("line {line}: bad n {:?}", field(0))))?;
        let failed = field(10);
        rows.push(ScanRow {
            n,
            alpha: num(1)?,
            c: opt(2)?,
            d: opt(3)?,
            sign_convention: None,
            condition_holds: flag(4)?,
            empirical_verdict: flag(5)?,
            worst_margin: num(6)?,
            witness: Complex64::new(num(7)?, num(8)?),
            nonvanishing_ok: flag(9)?,
            failed_clauses: if failed.is_empty() {
                Vec::new()
            } else {
                failed.split(';').map(str::to_string).collect()
            },
        });
    }
    Ok(rows)
}

fn convention_rank(c: Option<SignConvention>) -> u8 {
    match c {
        None => 0,
        Some(SignConvention::PlusD) => 1,
        Some(SignConvention::MinusD) => 2,
    }
}

/// One line per row per metric, grouped into contiguous blocks by sign
/// convention. Booleans are written as 0/1.
pub fn tidy_csv(rows: &[ScanRow]) -> Result<Vec<u8>> {
    let mut ordered: Vec<&ScanRow> = rows.iter().collect();
    ordered.sort_by_key(|r| convention_rank(r.sign_convention));

    let opt = |v: Option<f64>| v.map(format_real).unwrap_or_default();
    let bit = |b: bool| if b { "1" } else { "0" }.to_string();
    let io = |e: csv::Error| Error::Io(e.to_string());

    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(TIDY_HEADER).map_err(io)?;
    for r in ordered {
        let conv = r.sign_convention.map(|c| c.as_str()).unwrap_or("");
        let values =
            [format_real(r.worst_margin), bit(r.condition_holds), bit(r.empirical_verdict), bit(r.nonvanishing_ok)];
        for (metric, value) in METRICS.iter().zip(values) {
            w.write_record([
                conv.to_string(),
                r.n.to_string(),
                format_real(r.alpha),
                opt(r.c),
                opt(r.d),
                metric.to_string(),
                value,
            ])
            .map_err(io)?;
        }
    }
    w.into_inner().map_err(|e| Error::Io(e.to_string()))
}
