//! PVN v1, a plain-text grid format for diagrams.
//!
//! ```text
//! pvn 1
//! n 2
//! rows 3
//! cols 1
//! origin 0 -1
//! 1
//! 3
//! 2
//! ```
//!
//! `origin` is the bottom-left cell of the bounding box. Grid rows follow,
//! topmost first, each holding `cols` whitespace-separated tokens: `.` for an
//! empty cell or the mask in lowercase hex without prefix.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::model::{CellCoord, GridDiagram, SubsetMask};

pub fn serialize_pvn(d: &GridDiagram) -> String {
    let mut out = String::new();
    let (rows, cols, origin) = match d.bounds() {
        Some(b) => (b.height(), b.width(), (b.min_x, b.min_y)),
        None => (0, 0, (0, 0)),
    };
    writeln!(out, "pvn 1").unwrap();
    writeln!(out, "n {}", d.n()).unwrap();
    writeln!(out, "rows {rows}").unwrap();
    writeln!(out, "cols {cols}").unwrap();
    writeln!(out, "origin {} {}", origin.0, origin.1).unwrap();
    for r in (0..rows as i32).rev() {
        let line: Vec<String> = (0..cols as i32)
            .map(|c| match d.get(CellCoord::new(origin.0 + c, origin.1 + r)) {
                Some(m) => format!("{:x}", m.bits()),
                None => ".".to_string(),
            })
            .collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Reads a header line `key <values..>` and returns its integer values.
fn header<'a, I>(lines: &mut I, key: &str, arity: usize) -> Result<Vec<i64>>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let (no, line) = lines
        .next()
        .ok_or_else(|| err(0, format!("missing `{key}` header")))?;
    let mut parts = line.split_whitespace();
    if parts.next() != Some(key) {
        return Err(err(no, format!("expected `{key}` header")));
    }
    let values = parts
        .map(|p| p.parse::<i64>().map_err(|_| err(no, format!("bad integer {p:?}"))))
        .collect::<Result<Vec<_>>>()?;
    if values.len() != arity {
        return Err(err(no, format!("`{key}` takes {arity} value(s)")));
    }
    Ok(values)
}

pub fn parse_pvn(text: &str) -> Result<GridDiagram> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));

    let (no, first) = lines.next().ok_or_else(|| err(1, "empty input"))?;
    let magic: Vec<&str> = first.split_whitespace().collect();
    match magic.as_slice() {
        ["pvn", "1"] => {}
        ["pvn", v] => return Err(err(no, format!("unsupported version {v}"))),
        _ => return Err(err(no, "expected `pvn 1`")),
    }
    let n = header(&mut lines, "n", 1)?[0];
    let rows = header(&mut lines, "rows", 1)?[0];
    let cols = header(&mut lines, "cols", 1)?[0];
    let origin = header(&mut lines, "origin", 2)?;
    let n = u32::try_from(n).map_err(|_| err(2, "n must be positive"))?;
    let rows = u32::try_from(rows).map_err(|_| err(3, "rows must be non-negative"))?;
    let cols = u32::try_from(cols).map_err(|_| err(4, "cols must be non-negative"))?;
    let to_i32 = |v: i64| i32::try_from(v).map_err(|_| err(5, "origin out of range"));
    let (ox, oy) = (to_i32(origin[0])?, to_i32(origin[1])?);

    let mut d = GridDiagram::new(n).map_err(|e| err(2, e.to_string()))?;
    for r in 0..rows as i32 {
        let (no, line) = lines
            .next()
            .ok_or_else(|| err(0, format!("expected {rows} grid rows, found {r}")))?;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != cols as usize {
            return Err(err(no, format!("row has {} tokens, expected {cols}", tokens.len())));
        }
        let y = oy + rows as i32 - 1 - r;
        for (c, tok) in tokens.iter().enumerate() {
            if *tok == "." {
                continue;
            }
            if !tok.bytes().all(|b| b.is_ascii_digit() || (b'a'..=b'f').contains(&b)) {
                return Err(err(no, format!("bad token {tok:?}")));
            }
            let bits = u32::from_str_radix(tok, 16)
                .map_err(|_| err(no, format!("mask {tok:?} too large")))?;
            if bits == 0 {
                return Err(err(no, "empty cells are written `.`, not `0`"));
            }
            d.insert(CellCoord::new(ox + c as i32, y), SubsetMask::from_bits(bits))
                .map_err(|e| err(no, e.to_string()))?;
        }
    }
    if let Some((no, extra)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(err(no, format!("unexpected trailing line {extra:?}")));
    }
    Ok(d)
}
