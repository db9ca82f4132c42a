//! CSV ingestion.
//!
//! Accepted dialect: comma separated, decimal-point reals, an optional header
//! row and an optional leading column of point labels. A first row is treated
//! as a header when any of its cells after the first is non-numeric, or when
//! its first cell is non-numeric while the next row's first cell is numeric.
//! A label column is present when the first cell of the first data row is
//! non-numeric. Errors name the 1-based file row and column.

use std::fs::File;
use std::io::Read;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::geometry::Dataset;

fn is_numeric(cell: &str) -> bool {
    cell.parse::<f64>().is_ok_and(f64::is_finite)
}

pub fn parse_csv(path: impl AsRef<Path>) -> Result<Dataset> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_csv_reader(file, path)
}

pub fn parse_csv_str(text: &str, source: impl Into<PathBuf>) -> Result<Dataset> {
    parse_csv_reader(text.as_bytes(), source)
}

pub fn parse_csv_reader<R: Read>(reader: R, source: impl Into<PathBuf>) -> Result<Dataset> {
    let path = source.into();
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);

    let mut rows: Vec<(usize, Vec<String>)> = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(|e| Error::Csv {
            path: path.clone(),
            message: e.to_string(),
        })?;
        if record.iter().all(str::is_empty) {
            continue;
        }
        let line = record
            .position()
            .map_or(rows.len() + 1, |p| p.line() as usize);
        rows.push((line, record.iter().map(str::to_owned).collect()));
    }
    if rows.is_empty() {
        return Err(Error::Csv {
            path,
            message: "file contains no rows".into(),
        });
    }

    let first = &rows[0].1;
    let has_header = first[1..].iter().any(|c| !is_numeric(c))
        || (!is_numeric(&first[0]) && rows.get(1).is_some_and(|(_, r)| is_numeric(&r[0])));
    let data = &rows[usize::from(has_header)..];
    if data.is_empty() {
        return Err(Error::Csv {
            path,
            message: "file has a header but no data rows".into(),
        });
    }

    let has_label = !is_numeric(&data[0].1[0]);
    let width = data[0].1.len();
    let offset = usize::from(has_label);
    let dim = width - offset;
    if dim == 0 {
        return Err(Error::Parse {
            path,
            row: data[0].0,
            column: 1,
            message: format!("no numeric coordinate columns (found {:?})", data[0].1[0]),
        });
    }

    let mut coords = Vec::with_capacity(dim * data.len());
    let mut labels = Vec::with_capacity(if has_label { data.len() } else { 0 });
    for (line, cells) in data {
        if cells.len() != width {
            return Err(Error::Parse {
                path,
                row: *line,
                column: cells.len().min(width) + 1,
                message: format!("expected {width} columns, found {}", cells.len()),
            });
        }
        if has_label {
            labels.push(cells[0].clone());
        }
        for (col, cell) in cells.iter().enumerate().skip(offset) {
            let value = cell.parse::<f64>().map_err(|_| Error::Parse {
                path: path.clone(),
                row: *line,
                column: col + 1,
                message: format!("non-numeric coordinate {cell:?}"),
            })?;
            if !value.is_finite() {
                return Err(Error::Parse {
                    path,
                    row: *line,
                    column: col + 1,
                    message: format!("non-finite coordinate {cell:?}"),
                });
            }
            coords.push(value);
        }
    }

    let dataset = Dataset::from_flat(dim, coords)?;
    if has_label {
        dataset.with_labels(labels)
    } else {
        Ok(dataset)
    }
}
