//! Covariance matrix files.
//!
//! CSV: one matrix row per line, comma-separated, no header.
//! JSON: nested arrays, row-major.
//!
//! Writers print every entry with the shortest representation that parses
//! back to the same `f64`, so read → write → read is bit-identical.

use std::fs;
use std::path::Path;

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// Parses CSV covariance text. Row and column numbers in errors are 1-based.
pub fn parse_csv(text: &str) -> Result<Vec<Vec<f64>>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for (r, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::Parse {
            row: r + 1,
            col: 0,
            message: e.to_string(),
        })?;
        if record.len() == 1 && record[0].is_empty() {
            continue;
        }
        let row = record
            .iter()
            .enumerate()
            .map(|(c, field)| {
                field.parse::<f64>().map_err(|_| Error::Parse {
                    row: r + 1,
                    col: c + 1,
                    message: format!("not a number: {field:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    check_rectangular(&rows)?;
    Ok(rows)
}

/// Parses JSON covariance text (nested arrays).
pub fn parse_json(text: &str) -> Result<Vec<Vec<f64>>> {
    let rows: Vec<Vec<f64>> = serde_json::from_str(text).map_err(|e| Error::Parse {
        row: e.line(),
        col: e.column(),
        message: e.to_string(),
    })?;
    check_rectangular(&rows)?;
    Ok(rows)
}

fn check_rectangular(rows: &[Vec<f64>]) -> Result<()> {
    if rows.is_empty() {
        return Err(Error::Parse {
            row: 1,
            col: 1,
            message: "empty covariance matrix".into(),
        });
    }
    let n = rows.len();
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Parse {
                row: r + 1,
                col: row.len().min(n) + 1,
                message: format!("expected {n} columns, found {}", row.len()),
            });
        }
        if let Some(c) = row.iter().position(|v| !v.is_finite()) {
            return Err(Error::Parse {
                row: r + 1,
                col: c + 1,
                message: "non-finite entry".into(),
            });
        }
    }
    Ok(())
}

pub fn to_csv(matrix: &DMatrix<f64>) -> String {
    let mut out = String::new();
    for i in 0..matrix.nrows() {
        let line: Vec<String> = (0..matrix.ncols())
            .map(|j| format!("{}", matrix[(i, j)]))
            .collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

pub fn to_json(matrix: &DMatrix<f64>) -> String {
    let rows = matrix_rows(matrix);
    serde_json::to_string(&rows).expect("finite matrix serializes")
}

pub(crate) fn matrix_rows(matrix: &DMatrix<f64>) -> Vec<Vec<f64>> {
    (0..matrix.nrows())
        .map(|i| (0..matrix.ncols()).map(|j| matrix[(i, j)]).collect())
        .collect()
}

/// Reads a covariance file, choosing JSON for a `.json` extension and CSV
/// otherwise.
pub fn read_covariance(path: &Path) -> Result<Vec<Vec<f64>>> {
    let text = fs::read_to_string(path)?;
    if is_json(path) {
        parse_json(&text)
    } else {
        parse_csv(&text)
    }
}

pub fn write_covariance(path: &Path, matrix: &DMatrix<f64>) -> Result<()> {
    let text = if is_json(path) {
        to_json(matrix)
    } else {
        to_csv(matrix)
    };
    fs::write(path, text)?;
    Ok(())
}

fn is_json(path: &Path) -> bool {
    path.extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("json"))
}
