//! Line-based text formats.
//!
//! ```text
//! ternary <n>        poset <n>
//! x y z              x y        (generator: x < y)
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Output uses single
//! spaces and `\n` line endings; posets are written with every strict pair.

use std::fmt;
use std::fmt::Write as _;

use betpo_core::{poset_from_pairs, Poset, TernaryStructure};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureFile {
    Ternary(TernaryStructure),
    Poset(Poset),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub reason: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.reason)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError {
        line,
        reason: reason.into(),
    }
}

pub fn parse(text: &str) -> Result<StructureFile, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| err(1, "missing header"))?;
    let mut words = header.split_whitespace();
    let kind = words.next().unwrap_or_default();
    let arity = match kind {
        "ternary" => 3,
        "poset" => 2,
        other => {
            return Err(err(
                header_line,
                format!("unknown kind `{other}`, expected `ternary` or `poset`"),
            ))
        }
    };
    let n: usize = match (words.next(), words.next()) {
        (Some(w), None) => w
            .parse()
            .map_err(|_| err(header_line, format!("invalid vertex count `{w}`")))?,
        _ => return Err(err(header_line, "header must be `<kind> <vertex count>`")),
    };

    let mut tuples = Vec::new();
    for (line, body) in lines {
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != arity {
            return Err(err(
                line,
                format!("expected {arity} indices, found {}", fields.len()),
            ));
        }
        let mut tuple = [0usize; 3];
        for (slot, field) in tuple.iter_mut().zip(&fields) {
            let v: usize = field
                .parse()
                .map_err(|_| err(line, format!("invalid index `{field}`")))?;
            if v >= n {
                return Err(err(line, format!("index {v} out of range 0..{n}")));
            }
            *slot = v;
        }
        tuples.push((line, tuple));
    }

    match arity {
        3 => {
            let s = TernaryStructure::new(n, tuples.into_iter().map(|(_, t)| t))
                .map_err(|e| err(header_line, e.to_string()))?;
            Ok(StructureFile::Ternary(s))
        }
        _ => {
            let p = poset_from_pairs(n, tuples.into_iter().map(|(_, t)| (t[0], t[1])))
                .map_err(|e| err(header_line, e.to_string()))?;
            Ok(StructureFile::Poset(p))
        }
    }
}

pub fn write_ternary(s: &TernaryStructure) -> String {
    let mut out = format!("ternary {}\n", s.n());
    for [x, y, z] in s.triples() {
        let _ = writeln!(out, "{x} {y} {z}");
    }
    out
}

pub fn write_poset(p: &Poset) -> String {
    let mut out = format!("poset {}\n", p.n());
    for (x, y) in p.pairs() {
        let _ = writeln!(out, "{x} {y}");
    }
    out
}
