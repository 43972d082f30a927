//! Plain-text graph files.
//!
//! ```text
//! # comment lines start with '#'
//! n 3
//! 0 1
//! 1 2
//! label 0 a
//! label 2 b
//! ```
//!
//! The header `n <count>` comes first. Each edge line is `<u> <v>` with
//! `u < v < n`, and duplicate edges are rejected. Optional `label <v> <text>`
//! lines follow the edges; the label is the remainder of the line. Tokens
//! are separated by single spaces and lines end in LF.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `n <count>` header")]
    MissingHeader,
    #[error("malformed header")]
    BadHeader,
    #[error("malformed line")]
    BadLine,
    #[error("carriage return found; only LF line endings are accepted")]
    CarriageReturn,
    #[error("invalid number `{0}`")]
    BadNumber(String),
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("edge must be written as `u v` with u < v")]
    Unordered,
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("edge line after label lines")]
    EdgeAfterLabel,
    #[error("vertex {0} labelled twice")]
    DuplicateLabel(usize),
    #[error("empty label")]
    EmptyLabel,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error)]
pub enum ReadError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

fn number(token: &str) -> Result<usize, ParseErrorKind> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseErrorKind::BadNumber(token.to_string()));
    }
    token.parse().map_err(|_| ParseErrorKind::BadNumber(token.to_string()))
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut labels: Vec<Option<String>> = Vec::new();
    let mut in_labels = false;

    for (idx, raw) in text.split('\n').enumerate() {
        let line = idx + 1;
        let err = |kind| ParseError { line, kind };
        if raw.contains('\r') {
            return Err(err(ParseErrorKind::CarriageReturn));
        }
        if raw.is_empty() || raw.starts_with('#') {
            continue;
        }
        let Some(count) = n else {
            let count = raw
                .strip_prefix("n ")
                .ok_or(err(ParseErrorKind::MissingHeader))
                .and_then(|rest| number(rest).map_err(|_| err(ParseErrorKind::BadHeader)))?;
            n = Some(count);
            labels = vec![None; count];
            continue;
        };

        if let Some(rest) = raw.strip_prefix("label ") {
            in_labels = true;
            let (id, text) = rest.split_once(' ').ok_or(err(ParseErrorKind::BadLine))?;
            let v = number(id).map_err(err)?;
            if v >= count {
                return Err(err(ParseErrorKind::OutOfRange(v)));
            }
            if text.is_empty() {
                return Err(err(ParseErrorKind::EmptyLabel));
            }
            if labels[v].replace(text.to_string()).is_some() {
                return Err(err(ParseErrorKind::DuplicateLabel(v)));
            }
            continue;
        }

        if in_labels {
            return Err(err(ParseErrorKind::EdgeAfterLabel));
        }
        let mut tokens = raw.split(' ');
        let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(err(ParseErrorKind::BadLine));
        };
        let (u, v) = (number(a).map_err(err)?, number(b).map_err(err)?);
        if v >= count {
            return Err(err(ParseErrorKind::OutOfRange(v)));
        }
        if u >= v {
            return Err(err(ParseErrorKind::Unordered));
        }
        if !seen.insert((u, v)) {
            return Err(err(ParseErrorKind::DuplicateEdge(u, v)));
        }
        edges.push((u, v));
    }

    let count = n.ok_or(ParseError {
        line: 1,
        kind: ParseErrorKind::MissingHeader,
    })?;
    let graph = Graph::new(count, edges).expect("edges were validated while parsing");
    Ok(graph.with_labels(labels).expect("one label slot per vertex"))
}

/// Serializes a graph: header, edges in lexicographic order, then labels in
/// vertex order.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.n()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    for (v, label) in g.labels().iter().enumerate() {
        if let Some(label) = label {
            writeln!(out, "label {v} {label}").unwrap();
        }
    }
    out
}

pub fn read_graph_file(path: impl AsRef<Path>) -> Result<Graph, ReadError> {
    let text = fs::read_to_string(path)?;
    Ok(parse_graph(&text)?)
}

pub fn write_graph_file(path: impl AsRef<Path>, g: &Graph) -> io::Result<()> {
    fs::write(path, write_graph(g))
}
