//! Plain-text exchange formats for inequality and ray lists.
//!
//! ```text
//! # optional comments
//! DIM 3
//! 1 0 0
//! 0 1 -1
//! ```
//!
//! Each data line holds `DIM` integers: the normal `a` of `<a, x> >= 0` in an
//! inequality file, or a ray generator in a ray file.

use std::fmt::Write;

use num_bigint::BigInt;
use thiserror::Error;

use super::{ConeError, Halfspace, Ray};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        message: message.into(),
    }
}

fn write_rows<'a>(dim: usize, header: Option<&str>, rows: impl Iterator<Item = &'a [BigInt]>) -> String {
    let mut out = String::new();
    if let Some(h) = header {
        for l in h.lines() {
            let _ = writeln!(out, "# {l}");
        }
    }
    let _ = writeln!(out, "DIM {dim}");
    for row in rows {
        let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

pub fn write_rays(dim: usize, rays: &[Ray], header: Option<&str>) -> String {
    write_rows(dim, header, rays.iter().map(|r| r.coords()))
}

pub fn write_halfspaces(dim: usize, halfspaces: &[Halfspace], header: Option<&str>) -> String {
    write_rows(dim, header, halfspaces.iter().map(|h| h.normal()))
}

/// Data rows with their 1-based line numbers.
type Rows = Vec<(usize, Vec<BigInt>)>;

fn parse_rows(text: &str) -> Result<(usize, Rows), FormatError> {
    let mut dim = None;
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some(d) = dim else {
            let mut parts = line.split_whitespace();
            if parts.next() != Some("DIM") {
                return Err(err(line_no, "expected `DIM d` header"));
            }
            let d: usize = parts
                .next()
                .ok_or_else(|| err(line_no, "missing dimension"))?
                .parse()
                .map_err(|_| err(line_no, "dimension is not a non-negative integer"))?;
            if parts.next().is_some() {
                return Err(err(line_no, "trailing tokens after dimension"));
            }
            dim = Some(d);
            continue;
        };
        let row: Vec<BigInt> = line
            .split_whitespace()
            .map(|t| {
                t.parse::<BigInt>()
                    .map_err(|_| err(line_no, format!("`{t}` is not an integer")))
            })
            .collect::<Result<_, _>>()?;
        if row.len() != d {
            return Err(err(line_no, format!("expected {d} entries, found {}", row.len())));
        }
        rows.push((line_no, row));
    }
    let dim = dim.ok_or_else(|| err(text.lines().count().max(1), "missing `DIM d` header"))?;
    Ok((dim, rows))
}

fn zero_row(line: usize, e: ConeError) -> FormatError {
    err(line, e.to_string())
}

/// Rows are normalized to primitive vectors; zero rows are rejected.
pub fn parse_rays(text: &str) -> Result<(usize, Vec<Ray>), FormatError> {
    let (dim, rows) = parse_rows(text)?;
    let rays = rows
        .into_iter()
        .map(|(l, r)| Ray::new(r).map_err(|e| zero_row(l, e)))
        .collect::<Result<_, _>>()?;
    Ok((dim, rays))
}

pub fn parse_halfspaces(text: &str) -> Result<(usize, Vec<Halfspace>), FormatError> {
    let (dim, rows) = parse_rows(text)?;
    let hs = rows
        .into_iter()
        .map(|(l, r)| Halfspace::new(r).map_err(|e| zero_row(l, e)))
        .collect::<Result<_, _>>()?;
    Ok((dim, hs))
}
