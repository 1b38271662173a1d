//! Plain-text Cayley tables: the order `n` on the first line, then `n`
//! rows of `n` whitespace-separated element ids. Id `0` is the identity.
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write;

use elemorder_core::explicit::{CayleyGroup, ExplicitError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("missing order line")]
    MissingHeader,
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("order {order} exceeds the cap of {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("invalid table: {0}")]
    Invalid(#[from] ExplicitError),
}

/// Parses and validates a table of order at most `cap`.
pub fn parse_table(text: &str, cap: usize) -> Result<CayleyGroup, TableError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(TableError::MissingHeader)?;
    let n: usize = header.parse().map_err(|_| TableError::Syntax {
        line: hline,
        msg: format!("expected the order, found '{header}'"),
    })?;
    if n > cap {
        return Err(TableError::TooLarge { order: n, cap });
    }
    let mut rows = Vec::with_capacity(n);
    for (line, l) in lines {
        let row = l
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|_| TableError::Syntax {
                    line,
                    msg: format!("'{t}' is not an element id"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if rows.len() != n {
        return Err(TableError::RowCount {
            expected: n,
            found: rows.len(),
        });
    }
    Ok(CayleyGroup::validate_table(&rows)?)
}

pub fn write_table(g: &CayleyGroup) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", g.order());
    for a in g.elements() {
        let row: Vec<String> = g.row(a).map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}
