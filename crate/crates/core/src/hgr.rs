//! Reader and writer for the `HGR 1` text format.
//!
//! ```text
//! HGR 1
//! n 4
//! # comment lines start with '#'
//! e 0 1
//! e 0 1 2
//! e 2 3
//! ```
//!
//! Vertex ids are 0-based and strictly increasing inside each `e` line.
//! Edges may come in any order on input; duplicates are rejected. Output
//! always lists edges in canonical order, single-space separated, with a
//! trailing newline.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Largest vertex count accepted by the reader.
pub const MAX_VERTICES: usize = 1 << 20;

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn parse(text: &str) -> Result<Hypergraph> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line_no, header) = lines.next().ok_or_else(|| err(1, "missing `HGR 1` header"))?;
    if header.split_ascii_whitespace().collect::<Vec<_>>() != ["HGR", "1"] {
        return Err(err(line_no, format!("expected `HGR 1`, found `{header}`")));
    }

    let (line_no, count_line) = lines.next().ok_or_else(|| err(line_no + 1, "missing `n <vertex_count>` line"))?;
    let mut tokens = count_line.split_ascii_whitespace();
    if tokens.next() != Some("n") {
        return Err(err(line_no, format!("expected `n <vertex_count>`, found `{count_line}`")));
    }
    let n = match (tokens.next(), tokens.next()) {
        (Some(tok), None) => parse_id(tok, line_no)?,
        _ => return Err(err(line_no, "expected exactly one vertex count")),
    };
    if n > MAX_VERTICES {
        return Err(err(line_no, format!("vertex count {n} exceeds limit {MAX_VERTICES}")));
    }

    let mut edges: Vec<(Vec<usize>, usize)> = Vec::new();
    for (line_no, line) in lines {
        let mut tokens = line.split_ascii_whitespace();
        if tokens.next() != Some("e") {
            return Err(err(line_no, format!("expected an `e` line, found `{line}`")));
        }
        let edge = tokens.map(|t| parse_id(t, line_no)).collect::<Result<Vec<_>>>()?;
        if edge.len() < 2 {
            return Err(err(line_no, "an edge needs at least two vertices"));
        }
        if let Some(&v) = edge.iter().find(|&&v| v >= n) {
            return Err(err(line_no, format!("vertex {v} out of range (n = {n})")));
        }
        if edge.windows(2).any(|w| w[0] >= w[1]) {
            return Err(err(line_no, "vertex ids must be strictly increasing"));
        }
        edges.push((edge, line_no));
    }

    edges.sort();
    if let Some(w) = edges.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(err(w[1].1, format!("duplicate edge {:?} (first on line {})", w[1].0, w[0].1)));
    }
    Hypergraph::new(n, edges.into_iter().map(|(e, _)| e))
}

fn parse_id(token: &str, line: usize) -> Result<usize> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(line, format!("`{token}` is not a non-negative integer")));
    }
    token.parse().map_err(|_| err(line, format!("`{token}` is out of range")))
}

pub fn to_string(g: &Hypergraph) -> String {
    let mut out = format!("HGR 1\nn {}\n", g.vertex_count());
    for e in g.edges() {
        out.push('e');
        for v in e {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}
