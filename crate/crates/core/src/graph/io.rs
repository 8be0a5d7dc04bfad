//! Text formats.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` of whitespace-free
//! labels. Labels become ids in first-seen order; vertices never named by an
//! edge are labelled `#<id>`. Blank lines and lines starting with `#` are
//! ignored.
//!
//! DIMACS: `c` comment lines, a `p edge n m` header and `e u v` lines with
//! 1-based ids.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> ParseError {
        ParseError { line, column, message: message.into() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dimacs,
}

pub fn parse(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

pub fn write(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => write_edge_list(g),
        Format::Dimacs => write_dimacs(g),
    }
}

/// Whitespace-separated tokens of a line with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn parse_count(line: usize, (column, tok): (usize, &str), what: &str) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| ParseError::new(line, column, format!("expected {what}, found `{tok}`")))
}

fn graph_error(line: usize, err: GraphError) -> ParseError {
    ParseError::new(line, 1, err.to_string())
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| ParseError::new(1, 1, "missing `n m` header"))?;
    let toks = tokens(header);
    if toks.len() != 2 {
        return Err(ParseError::new(header_line, 1, "header must be `n m`"));
    }
    let n = parse_count(header_line, toks[0], "vertex count")?;
    let m = parse_count(header_line, toks[1], "edge count")?;

    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        last_line = line_no;
        let toks = tokens(line);
        if toks.len() != 2 {
            let col = toks.get(2).map_or(1, |t| t.0);
            return Err(ParseError::new(line_no, col, "edge line must be `u v`"));
        }
        if edges.len() == m {
            return Err(ParseError::new(line_no, 1, format!("more than {m} edge lines")));
        }
        let mut ends = [0usize; 2];
        for (slot, &(column, tok)) in ends.iter_mut().zip(&toks) {
            *slot = match ids.get(tok) {
                Some(&id) => id,
                None => {
                    if labels.len() == n {
                        return Err(ParseError::new(line_no, column, format!("more than {n} distinct labels")));
                    }
                    ids.insert(tok.to_string(), labels.len());
                    labels.push(tok.to_string());
                    labels.len() - 1
                }
            };
        }
        if ends[0] == ends[1] {
            return Err(ParseError::new(line_no, toks[1].0, format!("self-loop on `{}`", toks[0].1)));
        }
        edges.push((ends[0], ends[1]));
    }
    if edges.len() != m {
        return Err(ParseError::new(last_line, 1, format!("expected {m} edge lines, found {}", edges.len())));
    }
    while labels.len() < n {
        let mut label = format!("#{}", labels.len());
        while ids.contains_key(&label) {
            label.push('#');
        }
        ids.insert(label.clone(), labels.len());
        labels.push(label);
    }
    Graph::with_labels(labels, &edges).map_err(|e| graph_error(last_line, e))
}

pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 1;
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let toks = tokens(line);
        let Some(&(col, kind)) = toks.first() else { continue };
        last_line = line_no;
        match kind {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(ParseError::new(line_no, col, "duplicate `p` line"));
                }
                if toks.len() != 4 {
                    return Err(ParseError::new(line_no, col, "expected `p edge n m`"));
                }
                let n = parse_count(line_no, toks[2], "vertex count")?;
                let m = parse_count(line_no, toks[3], "edge count")?;
                header = Some((n, m));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(ParseError::new(line_no, col, "edge before `p` line"));
                };
                if toks.len() != 3 {
                    return Err(ParseError::new(line_no, col, "expected `e u v`"));
                }
                let mut ends = [0usize; 2];
                for (slot, &tok) in ends.iter_mut().zip(&toks[1..]) {
                    let v = parse_count(line_no, tok, "vertex id")?;
                    if v == 0 || v > n {
                        return Err(ParseError::new(line_no, tok.0, format!("vertex {v} outside 1..={n}")));
                    }
                    *slot = v - 1;
                }
                if ends[0] == ends[1] {
                    return Err(ParseError::new(line_no, toks[2].0, format!("self-loop on {}", ends[0] + 1)));
                }
                edges.push((ends[0], ends[1]));
            }
            other => return Err(ParseError::new(line_no, col, format!("unknown line type `{other}`"))),
        }
    }
    let (n, m) = header.ok_or_else(|| ParseError::new(last_line, 1, "missing `p edge n m` line"))?;
    if edges.len() != m {
        return Err(ParseError::new(last_line, 1, format!("expected {m} edges, found {}", edges.len())));
    }
    let labels = (1..=n).map(|v| v.to_string()).collect();
    Graph::with_labels(labels, &edges).map_err(|e| graph_error(last_line, e))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", g.label(u), g.label(v));
    }
    out
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}
