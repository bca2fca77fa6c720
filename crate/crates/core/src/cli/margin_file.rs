//! Margin text format.
//!
//! ```text
//! # comment
//! rows: 70 30 20 10 5^6 4^10 3^20 2^60
//! cols: 4^80 3^20
//! ```
//!
//! A term is an integer `x` or a run `x^k` meaning `k` copies of `x`.

use std::fmt;

use thiserror::Error;

use crate::margins::MarginSpec;

/// Largest run length accepted in `x^k`.
pub const MAX_RUN: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: bad term `{term}`: {reason}")]
    Term { line: usize, term: String, reason: String },
    #[error("line {line}: expected `rows:` or `cols:`")]
    UnknownLine { line: usize },
    #[error("`{0}:` given more than once")]
    Duplicate(&'static str),
    #[error("missing `{0}:` line")]
    Missing(&'static str),
    #[error("`{0}:` has no terms")]
    Empty(&'static str),
}

/// Parses whitespace-separated terms; `line` only labels errors.
pub fn parse_terms(text: &str, line: usize) -> Result<Vec<u32>, ParseError> {
    let mut out = Vec::new();
    for term in text.split_whitespace() {
        let bad = |reason: &str| ParseError::Term {
            line,
            term: term.to_string(),
            reason: reason.to_string(),
        };
        match term.split_once('^') {
            None => out.push(term.parse::<u32>().map_err(|e| bad(&e.to_string()))?),
            Some((x, k)) => {
                let x = x.parse::<u32>().map_err(|e| bad(&format!("value: {e}")))?;
                let k = k.parse::<u64>().map_err(|e| bad(&format!("repeat: {e}")))?;
                if k == 0 || k > MAX_RUN {
                    return Err(bad(&format!("repeat must be in 1..={MAX_RUN}")));
                }
                out.extend(std::iter::repeat_n(x, k as usize));
            }
        }
    }
    Ok(out)
}

/// Parses a margin document with one `rows:` and one `cols:` line.
pub fn parse_margin_file(text: &str) -> Result<MarginSpec, ParseError> {
    let mut rows = None;
    let mut cols = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (slot, name, rest) = if let Some(rest) = trimmed.strip_prefix("rows:") {
            (&mut rows, "rows", rest)
        } else if let Some(rest) = trimmed.strip_prefix("cols:") {
            (&mut cols, "cols", rest)
        } else {
            return Err(ParseError::UnknownLine { line });
        };
        if slot.is_some() {
            return Err(ParseError::Duplicate(name));
        }
        let terms = parse_terms(rest, line)?;
        if terms.is_empty() {
            return Err(ParseError::Empty(name));
        }
        *slot = Some(terms);
    }
    let rows = rows.ok_or(ParseError::Missing("rows"))?;
    let cols = cols.ok_or(ParseError::Missing("cols"))?;
    Ok(MarginSpec::new(rows, cols))
}

/// Run-length form of a sequence, the inverse of [`parse_terms`].
pub struct RunLength<'a>(pub &'a [u32]);

impl fmt::Display for RunLength<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for chunk in self.0.chunk_by(|a, b| a == b) {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            match chunk.len() {
                1 => write!(f, "{}", chunk[0])?,
                k => write!(f, "{}^{k}", chunk[0])?,
            }
        }
        Ok(())
    }
}
