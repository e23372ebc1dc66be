//! CSV ingestion and export for datasets.
//!
//! Header row of unique identifiers, one row per period, `.` decimals,
//! empty cells for missing observations. The delimiter (`,` or `;`) is
//! auto-detected from the header row unless given explicitly.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::{Dataset, Obs, Series};

#[derive(Debug, Clone, PartialEq)]
pub enum CsvError {
    Empty,
    InvalidHeader(String),
    DuplicateColumn(String),
    /// Row is 1-based counting the header as row 1.
    RaggedRow { row: usize, expected: usize, got: usize },
    BadNumber { row: usize, column: String, cell: String },
}

impl fmt::Display for CsvError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CsvError::Empty => write!(f, "empty CSV input"),
            CsvError::InvalidHeader(name) => write!(f, "invalid column name '{}'", name),
            CsvError::DuplicateColumn(name) => write!(f, "duplicate column '{}'", name),
            CsvError::RaggedRow { row, expected, got } => {
                write!(f, "row {}: {} fields, header has {}", row, got, expected)
            }
            CsvError::BadNumber { row, column, cell } => {
                write!(f, "row {}, column '{}': '{}' is not a number", row, column, cell)
            }
        }
    }
}

impl core::error::Error for CsvError {}

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses CSV text into a dataset (frequency 1, start period 1 until a
/// `setobs` adjusts the metadata). Cells must be numeric or empty; a blank
/// interior line is a row of empty cells (trailing blank lines are ignored).
pub fn parse(text: &str, delimiter: Option<char>) -> Result<Dataset, CsvError> {
    let all: Vec<&str> = text.lines().collect();
    let header_idx = all
        .iter()
        .position(|l| !l.trim().is_empty())
        .ok_or(CsvError::Empty)?;
    let header = all[header_idx];
    // Every line after the header is a data row. `str::lines` already drops
    // the final newline, so a blank last line really is an all-NA row.
    let lines = all[header_idx + 1..].iter().copied();
    let delim = delimiter.unwrap_or(if header.contains(';') { ';' } else { ',' });

    let names: Vec<String> = header
        .split(delim)
        .map(|s| s.trim().trim_matches('"').to_string())
        .collect();
    for (i, name) in names.iter().enumerate() {
        if !valid_identifier(name) {
            return Err(CsvError::InvalidHeader(name.clone()));
        }
        if names[..i].contains(name) {
            return Err(CsvError::DuplicateColumn(name.clone()));
        }
    }

    let mut columns: Vec<Vec<Obs>> = names.iter().map(|_| Vec::new()).collect();
    for (line_idx, line) in lines.enumerate() {
        let row = line_idx + 2; // header is row 1
        let cells: Vec<&str> = line.split(delim).collect();
        if cells.len() != names.len() {
            return Err(CsvError::RaggedRow {
                row,
                expected: names.len(),
                got: cells.len(),
            });
        }
        for (j, cell) in cells.iter().enumerate() {
            let cell = cell.trim();
            if cell.is_empty() {
                columns[j].push(None);
            } else {
                match cell.parse::<f64>() {
                    Ok(v) => columns[j].push(Some(v)),
                    Err(_) => {
                        return Err(CsvError::BadNumber {
                            row,
                            column: names[j].clone(),
                            cell: cell.to_string(),
                        })
                    }
                }
            }
        }
    }

    let n_obs = columns.first().map_or(0, |c| c.len());
    let mut ds = Dataset::new(n_obs, 1, 1);
    for (name, values) in names.into_iter().zip(columns) {
        ds.add_series(Series::new(name, values)).expect("lengths match");
    }
    Ok(ds)
}

/// Writes a dataset as CSV with 17 significant digits, enough for the parse →
/// write → parse round trip to be bit-identical.
pub fn write(ds: &Dataset) -> String {
    let names: Vec<&str> = ds.series_names().collect();
    let mut out = names.join(",");
    out.push('\n');
    for t in 1..=ds.n_obs() {
        let row: Vec<String> = names
            .iter()
            .map(|n| match ds.series(n).and_then(|s| s.get(t)) {
                Some(v) => format!("{:.16e}", v),
                None => String::new(),
            })
            .collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
