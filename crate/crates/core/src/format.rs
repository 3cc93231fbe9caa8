//! Grid file formats.
//!
//! CSV: one row per line, comma-separated signed decimal integers, no header.
//! Dimensions are inferred from the shape. Output uses LF line endings, no
//! trailing whitespace and no plus signs.
//!
//! JSON: `{"rows": m, "cols": n, "entries": [[...], ...]}`. The declared
//! dimensions are checked against `entries`.

use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::SignedArray;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GridFormat {
    #[default]
    Csv,
    Json,
}

impl GridFormat {
    /// Guess from a file extension, falling back to the first non-blank byte.
    pub fn detect(path: Option<&Path>, text: &str) -> GridFormat {
        match path.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => GridFormat::Json,
            Some(e) if e.eq_ignore_ascii_case("csv") => GridFormat::Csv,
            _ if text.trim_start().starts_with('{') => GridFormat::Json,
            _ => GridFormat::Csv,
        }
    }
}

impl FromStr for GridFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(GridFormat::Csv),
            "json" => Ok(GridFormat::Json),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonGrid {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<i64>>,
}

pub fn parse_csv(text: &str) -> Result<SignedArray> {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let lines: Vec<&str> = text.lines().collect();
    // Trailing blank lines are tolerated; interior ones are not.
    let last = lines.iter().rposition(|l| !l.trim().is_empty()).map_or(0, |p| p + 1);
    for (i, line) in lines[..last].iter().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() {
            return Err(Error::Parse(format!("line {}: empty line", i + 1)));
        }
        let row = line
            .split(',')
            .enumerate()
            .map(|(j, field)| {
                let field = field.trim();
                if field.is_empty() {
                    return Err(Error::Parse(format!("line {}, field {}: empty field", i + 1, j + 1)));
                }
                field
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("line {}, field {}: {field:?}: {e}", i + 1, j + 1)))
            })
            .collect::<Result<Vec<i64>>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Parse("empty grid".into()));
    }
    SignedArray::from_rows(&rows)
}

pub fn to_csv(a: &SignedArray) -> String {
    let mut out = String::with_capacity(a.entries().len() * 4);
    for row in a.row_iter() {
        for (j, e) in row.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            out.push_str(&e.to_string());
        }
        out.push('\n');
    }
    out
}

pub fn parse_json(text: &str) -> Result<SignedArray> {
    let grid: JsonGrid = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if grid.entries.len() != grid.rows {
        return Err(Error::Parse(format!(
            "declared {} rows but entries has {}",
            grid.rows,
            grid.entries.len()
        )));
    }
    for (i, r) in grid.entries.iter().enumerate() {
        if r.len() != grid.cols {
            return Err(Error::Ragged { row: i + 1, expected: grid.cols, found: r.len() });
        }
    }
    if grid.rows == 0 {
        return Ok(SignedArray::empty(0, grid.cols));
    }
    SignedArray::from_rows(&grid.entries)
}

pub fn to_json(a: &SignedArray) -> String {
    let grid = JsonGrid { rows: a.rows(), cols: a.cols(), entries: a.to_rows() };
    let mut s = serde_json::to_string(&grid).expect("integer grid serializes");
    s.push('\n');
    s
}

pub fn parse(text: &str, format: GridFormat) -> Result<SignedArray> {
    match format {
        GridFormat::Csv => parse_csv(text),
        GridFormat::Json => parse_json(text),
    }
}

pub fn serialize(a: &SignedArray, format: GridFormat) -> String {
    match format {
        GridFormat::Csv => to_csv(a),
        GridFormat::Json => to_json(a),
    }
}
