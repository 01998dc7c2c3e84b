//! Text file formats.
//!
//! Block file:
//!
//! ```text
//! blocks k n l count
//! v_1 v_2 ... v_k      (count lines, lexicographically sorted)
//! ```
//!
//! Cube file:
//!
//! ```text
//! cubes d n m
//! (m sections of n^(d-1) lines with n values each, last coordinate fastest,
//!  sections separated by a blank line)
//! ```
//!
//! Writers emit LF line endings and no trailing whitespace. Readers split on
//! whitespace and only check the header, token count and symbol range.

use std::fmt::Write as _;

use itertools::Itertools;
use thiserror::Error;

use crate::error::DesignError;
use crate::family::{Block, BlockFamily};
use crate::latin::{CubeSet, LatinCube};
use crate::params::{pow, validate_params};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("bad header {0:?}")]
    Header(String),
    #[error("bad integer {0:?}")]
    Integer(String),
    #[error("expected {expected} values, found {found}")]
    Count { expected: usize, found: usize },
    #[error(transparent)]
    Design(#[from] DesignError),
}

/// Canonical form of `family` as a block file.
pub fn write_blocks(family: &BlockFamily) -> String {
    let family = family.clone().canonical();
    let p = family.params();
    let mut out = format!("blocks {} {} {} {}\n", p.k(), p.n(), p.ell(), family.len());
    for block in family.blocks() {
        writeln!(out, "{block}").unwrap();
    }
    out
}

pub fn write_cubes(set: &CubeSet) -> String {
    let (d, n) = (set.dim(), set.order());
    let mut out = format!("cubes {} {} {}\n", d, n, set.len());
    for (i, cube) in set.cubes().iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        for line in cube.table().chunks(n) {
            writeln!(out, "{}", line.iter().join(" ")).unwrap();
        }
    }
    out
}

fn header<'a>(
    text: &'a str,
    tag: &str,
    fields: usize,
) -> Result<(Vec<usize>, &'a str), ParseError> {
    let text = text.trim_start_matches('\u{feff}');
    let (first, rest) = text.split_once('\n').unwrap_or((text, ""));
    let first = first.trim();
    if first.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut tokens = first.split_whitespace();
    if tokens.next() != Some(tag) {
        return Err(ParseError::Header(first.to_string()));
    }
    let values = tokens.map(parse_int).collect::<Result<Vec<_>, _>>()?;
    if values.len() != fields {
        return Err(ParseError::Header(first.to_string()));
    }
    Ok((values, rest))
}

fn parse_int(token: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError::Integer(token.to_string()))
}

fn body(rest: &str, expected: usize) -> Result<Vec<usize>, ParseError> {
    let values = rest
        .split_whitespace()
        .map(parse_int)
        .collect::<Result<Vec<_>, _>>()?;
    if values.len() != expected {
        return Err(ParseError::Count {
            expected,
            found: values.len(),
        });
    }
    Ok(values)
}

/// Blocks are returned in file order; duplicates are kept.
pub fn parse_blocks(text: &str) -> Result<BlockFamily, ParseError> {
    let (h, rest) = header(text, "blocks", 4)?;
    let (k, n, ell, count) = (h[0], h[1], h[2], h[3]);
    let params = validate_params(k, n, ell)?;
    let values = body(rest, k * count)?;
    let blocks = values.chunks(k).map(|c| Block::new(c.to_vec())).collect();
    Ok(BlockFamily::new(params, blocks)?)
}

pub fn parse_cubes(text: &str) -> Result<CubeSet, ParseError> {
    let (h, rest) = header(text, "cubes", 3)?;
    let (d, n, m) = (h[0], h[1], h[2]);
    if d == 0 || n == 0 {
        return Err(ParseError::Header(format!("cubes {d} {n} {m}")));
    }
    let volume = pow(n, d);
    let values = body(rest, volume * m)?;
    let cubes = values
        .chunks(volume)
        .map(|c| LatinCube::new(d, n, c.to_vec()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CubeSet::new(d, n, cubes)?)
}
