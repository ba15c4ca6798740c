//! Plain-text point set files.
//!
//! The format is one header line `PG r q` followed by one point per line as
//! comma-separated coordinate values (field elements written as their
//! integer indices 0..q-1, with 0 and 1 the additive and multiplicative
//! identities).  Blank lines and lines starting with `#` are ignored, so
//! generators may interleave commentary.  The writer always emits canonical
//! coordinates in ascending point order, making files diffable.

use std::io::{BufRead, Write};
use std::sync::Arc;

use thiserror::Error;

use crate::cap::{CapError, PointSet};
use crate::field::{Fe, FieldError, FieldSpec};
use crate::space::{build_space, ProjectiveSpace, SpaceError};

#[derive(Debug, Error)]
pub enum PointFileError {
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Cap(#[from] CapError),
}

fn parse_error(line: usize, message: impl Into<String>) -> PointFileError {
    PointFileError::Parse {
        line,
        message: message.into(),
    }
}

/// Writes `set` in the text format, canonical coordinates ascending by id.
pub fn write_points<W: Write>(set: &PointSet, mut out: W) -> Result<(), PointFileError> {
    let space = set.space();
    writeln!(out, "PG {} {}", space.r(), space.q())?;
    for &id in set.members() {
        let coords: Vec<String> = space
            .point(id)
            .coords()
            .iter()
            .map(|c| c.0.to_string())
            .collect();
        writeln!(out, "{}", coords.join(","))?;
    }
    Ok(())
}

/// Reads a point set in the text format.  Coordinates need not be canonical:
/// any nonzero scalar multiple names the same point.  Duplicate points are
/// rejected so that a round trip is exact.
pub fn read_points<R: BufRead>(input: R) -> Result<PointSet, PointFileError> {
    let mut lines = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim().to_string();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        lines.push((idx + 1, trimmed));
    }
    let Some((header_no, header)) = lines.first() else {
        return Err(parse_error(0, "empty file: expected a `PG r q` header"));
    };
    let space = parse_header(*header_no, header)?;
    let mut ids = Vec::new();
    let mut mask = vec![false; space.num_points()];
    for (line_no, text) in &lines[1..] {
        let id = parse_point(&space, *line_no, text)?;
        if mask[id.index()] {
            return Err(parse_error(
                *line_no,
                format!("duplicate point {}", space.point(id)),
            ));
        }
        mask[id.index()] = true;
        ids.push(id);
    }
    Ok(PointSet::new(&space, ids)?)
}

fn parse_header(line_no: usize, header: &str) -> Result<Arc<ProjectiveSpace>, PointFileError> {
    let mut parts = header.split_whitespace();
    if parts.next() != Some("PG") {
        return Err(parse_error(line_no, "header must start with `PG`"));
    }
    let r: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| parse_error(line_no, "header must read `PG r q`"))?;
    let q: u64 = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| parse_error(line_no, "header must read `PG r q`"))?;
    if parts.next().is_some() {
        return Err(parse_error(line_no, "trailing tokens after `PG r q`"));
    }
    let field = FieldSpec::of_order(q)?;
    Ok(build_space(&field, r)?)
}

fn parse_point(
    space: &Arc<ProjectiveSpace>,
    line_no: usize,
    text: &str,
) -> Result<crate::space::PointId, PointFileError> {
    let q = space.q();
    let mut coords = Vec::with_capacity(space.r() + 1);
    for token in text.split(',') {
        let value: u32 = token
            .trim()
            .parse()
            .map_err(|_| parse_error(line_no, format!("bad coordinate {token:?}")))?;
        if value >= q {
            return Err(parse_error(
                line_no,
                format!("coordinate {value} out of range for GF({q})"),
            ));
        }
        coords.push(Fe(value));
    }
    if coords.len() != space.r() + 1 {
        return Err(parse_error(
            line_no,
            format!(
                "expected {} coordinates, found {}",
                space.r() + 1,
                coords.len()
            ),
        ));
    }
    space.id_of(&coords).map_err(|e| match e {
        SpaceError::ZeroVector => parse_error(line_no, "the zero vector names no point"),
        other => PointFileError::Space(other),
    })
}
