//! Reading and writing multiplication tables.
//!
//! The text format (`.ist`) is a size line followed by that many rows of
//! whitespace-separated element ids. Everything after `#` on a line is a
//! comment. The JSON format is `{"n": .., "table": [[..]], "names": [..]}`
//! with `names` optional. Element 0 must be the zero in both.

use std::fs;
use std::path::Path;

use nstone_core::catalog::{self, CatalogId};
use nstone_core::MulTable;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("malformed input at line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("validation failed: {0}")]
    ValidationFailed(#[source] nstone_core::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("catalog: {0}")]
    Catalog(#[source] nstone_core::Error),
    #[error("`{0}` is neither a catalog id nor a readable file")]
    UnknownInput(String),
}

fn malformed(line: usize, msg: impl Into<String>) -> IoError {
    IoError::Malformed { line, msg: msg.into() }
}

fn validate(rows: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<MulTable, IoError> {
    let t = MulTable::new(rows).map_err(IoError::ValidationFailed)?;
    match names {
        Some(names) => t.with_names(names).map_err(IoError::ValidationFailed),
        None => Ok(t),
    }
}

pub fn parse_text(src: &str) -> Result<MulTable, IoError> {
    let mut lines = src
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first, size_line) = lines.next().ok_or_else(|| malformed(1, "empty input"))?;
    let n: usize = size_line.parse().map_err(|_| malformed(first, format!("expected a size, found `{size_line}`")))?;
    let mut rows = Vec::with_capacity(n);
    for (line, text) in lines {
        if rows.len() == n {
            return Err(malformed(line, "more rows than the declared size"));
        }
        let row = text
            .split_whitespace()
            .map(|x| x.parse::<usize>().map_err(|_| malformed(line, format!("`{x}` is not an element id"))))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(malformed(line, format!("expected {n} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(malformed(src.lines().count(), format!("expected {n} rows, found {}", rows.len())));
    }
    validate(rows, None)
}

pub fn to_text(t: &MulTable) -> String {
    let mut out = format!("{}\n", t.size());
    for row in t.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    n: usize,
    table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
}

pub fn parse_json(src: &str) -> Result<MulTable, IoError> {
    let doc: TableJson = serde_json::from_str(src)?;
    if doc.table.len() != doc.n {
        return Err(malformed(1, format!("n = {} but the table has {} rows", doc.n, doc.table.len())));
    }
    validate(doc.table, doc.names)
}

pub fn to_json(t: &MulTable) -> String {
    let doc = TableJson { n: t.size(), table: t.rows(), names: t.names().map(<[String]>::to_vec) };
    serde_json::to_string_pretty(&doc).expect("tables serialize")
}

/// Loads a catalog id such as `sym_inv:2`, or a `.json`/`.ist` file.
pub fn load(input: &str) -> Result<MulTable, IoError> {
    let path = Path::new(input);
    if path.is_file() {
        let src = fs::read_to_string(path).map_err(|source| IoError::Read { path: input.to_string(), source })?;
        return if path.extension().is_some_and(|e| e == "json") { parse_json(&src) } else { parse_text(&src) };
    }
    let id: CatalogId = input.parse().map_err(|_| IoError::UnknownInput(input.to_string()))?;
    catalog::build(id).map_err(IoError::Catalog)
}
