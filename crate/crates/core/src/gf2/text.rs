//! Plain-text matrix format.
//!
//! ```text
//! # optional comment lines
//! 4 7
//! 1000110
//! 0100011
//! 0010111
//! 0001101
//! ```
//!
//! The header holds `k n`, followed by exactly k rows of n `0`/`1` characters.
//! Trailing whitespace is ignored; anything else is an error.

use std::fmt::Write as _;

use super::{BitMatrix, Word};
use crate::error::{Error, Result};

pub fn parse_matrix<W: Word>(text: &str) -> Result<BitMatrix<W>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.starts_with('#'));

    let (hline, header) = lines
        .find(|(_, l)| !l.is_empty())
        .ok_or_else(|| Error::parse(1, "missing \"k n\" header"))?;
    let dims: Vec<&str> = header.split_ascii_whitespace().collect();
    let [k, n] = dims.as_slice() else {
        return Err(Error::parse(hline, "header must be \"k n\""));
    };
    let parse_dim = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::parse(hline, format!("bad dimension {s:?}")))
    };
    let (k, n) = (parse_dim(k)?, parse_dim(n)?);

    let mut m = BitMatrix::<W>::zeros(k, n);
    for r in 0..k {
        let (line, row) = lines
            .next()
            .ok_or_else(|| Error::parse(hline + r + 1, format!("expected {k} rows, found {r}")))?;
        if row.len() != n {
            return Err(Error::parse(
                line,
                format!("row has {} characters, expected {n}", row.len()),
            ));
        }
        for (c, ch) in row.bytes().enumerate() {
            match ch {
                b'0' => {}
                b'1' => m.set(r, c, true),
                _ => {
                    return Err(Error::parse(
                        line,
                        format!("unexpected character {:?} in column {}", ch as char, c + 1),
                    ))
                }
            }
        }
    }
    if let Some((line, _)) = lines.find(|(_, l)| !l.is_empty()) {
        return Err(Error::parse(line, "trailing data after the last row"));
    }
    Ok(m)
}

pub fn format_matrix<W: Word>(m: &BitMatrix<W>) -> String {
    let mut out = String::with_capacity((m.num_cols() + 1) * (m.num_rows() + 1));
    let _ = writeln!(out, "{} {}", m.num_rows(), m.num_cols());
    for r in 0..m.num_rows() {
        for c in 0..m.num_cols() {
            out.push(if m.get(r, c) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}
