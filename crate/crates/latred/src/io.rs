//! Basis file format and report rendering.
//!
//! A basis file is line-oriented text:
//!
//! ```text
//! ambient 3
//! rank 2
//! rows
//! 1 0 0
//! 0 1 0
//! ```
//!
//! Blank lines and `#` comments are accepted on input; output is canonical
//! (no comments), so write(read(f)) == f for canonical files and values
//! always round-trip exactly.

use std::fs;
use std::path::Path;

use num::BigInt;

use crate::basis::Basis;
use crate::error::{LatticeError, Result};
use crate::reduce::ReductionReport;

pub fn render_basis(basis: &Basis) -> String {
    let mut out = String::new();
    out.push_str(&format!("ambient {}\n", basis.ambient_dim()));
    out.push_str(&format!("rank {}\n", basis.rank()));
    out.push_str("rows\n");
    for row in basis.rows() {
        let parts: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str(&parts.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_basis(text: &str) -> Result<Basis> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let ambient = parse_field(lines.next(), "ambient")?;
    let rank = parse_field(lines.next(), "rank")?;
    match lines.next() {
        Some("rows") => {}
        other => {
            return Err(LatticeError::Parse(format!(
                "expected 'rows', found {:?}",
                other.unwrap_or("end of file")
            )))
        }
    }
    let mut rows = Vec::with_capacity(rank);
    for _ in 0..rank {
        let line = lines
            .next()
            .ok_or_else(|| LatticeError::Parse(format!("expected {rank} rows")))?;
        let row: Vec<BigInt> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<BigInt>()
                    .map_err(|e| LatticeError::Parse(format!("bad integer '{tok}': {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != ambient {
            return Err(LatticeError::Parse(format!(
                "row has {} entries, expected {ambient}",
                row.len()
            )));
        }
        rows.push(row);
    }
    if let Some(extra) = lines.next() {
        return Err(LatticeError::Parse(format!("unexpected trailing content '{extra}'")));
    }
    Basis::new(rows)
}

fn parse_field(line: Option<&str>, name: &str) -> Result<usize> {
    let line = line.ok_or_else(|| LatticeError::Parse(format!("missing '{name}' field")))?;
    let mut it = line.split_whitespace();
    match (it.next(), it.next(), it.next()) {
        (Some(key), Some(val), None) if key == name => val
            .parse::<usize>()
            .map_err(|e| LatticeError::Parse(format!("bad '{name}' value: {e}"))),
        _ => Err(LatticeError::Parse(format!("expected '{name} <value>', found '{line}'"))),
    }
}

pub fn read_basis(path: &Path) -> Result<Basis> {
    parse_basis(&fs::read_to_string(path)?)
}

pub fn write_basis(path: &Path, basis: &Basis) -> Result<()> {
    fs::write(path, render_basis(basis))?;
    Ok(())
}

/// Line-oriented reduction report: run metrics, the minima certificate,
/// and the recorded transform. All rationals print exactly (`p/q`).
pub fn render_report(report: &ReductionReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("method {}\n", report.method));
    out.push_str(&format!("rank {}\n", report.output_basis.rank()));
    out.push_str(&format!("ambient {}\n", report.output_basis.ambient_dim()));
    out.push_str(&format!("defect_before {}\n", report.defect_before));
    out.push_str(&format!("defect_after {}\n", report.defect_after));
    out.push_str(&format!("property1_ok {}\n", report.property1_ok));
    out.push_str(&format!("property2_ok {}\n", report.property2_ok));
    out.push_str(&format!("theorem1_ok {}\n", report.theorem1_ok));
    out.push_str(&format!("k_profile {}\n", join_usize(&report.k_profile)));
    let lambda: Vec<String> = report.minima.lambda_sq.iter().map(|x| x.to_string()).collect();
    out.push_str(&format!("lambda_sq {}\n", lambda.join(" ")));
    out.push_str("minima_vectors\n");
    for v in &report.minima.vectors {
        let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        out.push_str(&parts.join(" "));
        out.push('\n');
    }
    out.push_str("transform\n");
    for row in report.transform.entries() {
        let parts: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str(&parts.join(" "));
        out.push('\n');
    }
    out
}

fn join_usize(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn write_report(path: &Path, report: &ReductionReport) -> Result<()> {
    fs::write(path, render_report(report))?;
    Ok(())
}
