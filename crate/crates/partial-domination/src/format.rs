//! Text formats for graphs.
//!
//! Edge list: the first content line is the vertex count, then one `u v` pair
//! per line with 0-based endpoints; `#` starts a comment anywhere on a line.
//!
//! DIMACS: a `p edge <n> <m>` header, then exactly `m` lines `e <u> <v>` with
//! 1-based endpoints; `c` lines are comments.
//!
//! Both parsers reject self-loops, duplicate edges, and out-of-range
//! endpoints, and report 1-based line numbers on every error. Serializing and
//! reparsing reproduces the graph exactly.

use crate::graph::{Graph, GraphError};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dimacs,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected a vertex count")]
    MissingHeader,
    #[error("malformed header, expected {expected:?}")]
    BadHeader { expected: &'static str },
    #[error("malformed edge line {content:?}")]
    BadEdge { content: String },
    #[error("unknown directive {directive:?}")]
    UnknownDirective { directive: String },
    #[error("declared {declared} edges but found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("{0}")]
    Graph(GraphError),
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Guesses the format: lines opening with `c` or `p` mean DIMACS, anything
/// else is treated as an edge list.
pub fn sniff_format(text: &str) -> Format {
    for line in text.lines() {
        let trimmed = line.trim_start();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed.starts_with("c ") || trimmed == "c" || trimmed.starts_with("p ") {
            return Format::Dimacs;
        }
        return Format::EdgeList;
    }
    Format::EdgeList
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

pub fn serialize_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => serialize_edge_list(g),
        Format::Dimacs => serialize_dimacs(g),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_ascii_whitespace();
        match n {
            None => {
                let count: usize = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err(line_no, ParseErrorKind::BadHeader { expected: "<n>" }))?;
                if tokens.next().is_some() {
                    return Err(err(line_no, ParseErrorKind::BadHeader { expected: "<n>" }));
                }
                n = Some(count);
            }
            Some(n) => {
                let (u, v) = parse_pair(&mut tokens)
                    .ok_or_else(|| err(line_no, ParseErrorKind::BadEdge { content: content.to_string() }))?;
                validate_edge(n, u, v, &edges).map_err(|kind| err(line_no, kind))?;
                edges.push((u, v));
            }
        }
    }
    let n = n.ok_or_else(|| err(last_line.max(1), ParseErrorKind::MissingHeader))?;
    Graph::from_edges(n, &edges).map_err(|e| err(last_line.max(1), ParseErrorKind::Graph(e)))
}

pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let content = raw.trim();
        if content.is_empty() || content == "c" || content.starts_with("c ") {
            continue;
        }
        let mut tokens = content.split_ascii_whitespace();
        let directive = tokens.next().unwrap_or("");
        match directive {
            "p" => {
                let bad = || err(line_no, ParseErrorKind::BadHeader { expected: "p edge <n> <m>" });
                if header.is_some() || tokens.next() != Some("edge") {
                    return Err(bad());
                }
                let n: usize = tokens.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
                let m: usize = tokens.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
                if tokens.next().is_some() {
                    return Err(bad());
                }
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header
                    .ok_or_else(|| err(line_no, ParseErrorKind::BadHeader { expected: "p edge <n> <m>" }))?;
                let (u1, v1) = parse_pair(&mut tokens)
                    .ok_or_else(|| err(line_no, ParseErrorKind::BadEdge { content: content.to_string() }))?;
                // 1-based on the wire.
                if u1 == 0 || v1 == 0 {
                    return Err(err(
                        line_no,
                        ParseErrorKind::Graph(GraphError::InvalidVertex { vertex: 0, n }),
                    ));
                }
                let (u, v) = (u1 - 1, v1 - 1);
                validate_edge(n, u, v, &edges).map_err(|kind| err(line_no, kind))?;
                edges.push((u, v));
            }
            other => {
                return Err(err(
                    line_no,
                    ParseErrorKind::UnknownDirective { directive: other.to_string() },
                ))
            }
        }
    }
    let (n, m) = header.ok_or_else(|| err(last_line.max(1), ParseErrorKind::MissingHeader))?;
    if edges.len() != m {
        return Err(err(
            last_line.max(1),
            ParseErrorKind::EdgeCountMismatch { declared: m, found: edges.len() },
        ));
    }
    Graph::from_edges(n, &edges).map_err(|e| err(last_line.max(1), ParseErrorKind::Graph(e)))
}

fn parse_pair<'a>(tokens: &mut impl Iterator<Item = &'a str>) -> Option<(usize, usize)> {
    let u = tokens.next()?.parse().ok()?;
    let v = tokens.next()?.parse().ok()?;
    if tokens.next().is_some() {
        return None;
    }
    Some((u, v))
}

fn validate_edge(
    n: usize,
    u: usize,
    v: usize,
    seen: &[(usize, usize)],
) -> Result<(), ParseErrorKind> {
    if u >= n {
        return Err(ParseErrorKind::Graph(GraphError::InvalidVertex { vertex: u, n }));
    }
    if v >= n {
        return Err(ParseErrorKind::Graph(GraphError::InvalidVertex { vertex: v, n }));
    }
    if u == v {
        return Err(ParseErrorKind::Graph(GraphError::SelfLoop { vertex: u }));
    }
    if seen.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u)) {
        return Err(ParseErrorKind::Graph(GraphError::DuplicateEdge { u, v }));
    }
    Ok(())
}

pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", g.vertex_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn serialize_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs_path() {
        let g = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn edge_list_path_with_comments() {
        let g = parse_edge_list("# a path\n3\n0 1 # first edge\n1 2\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn self_loop_rejected_with_line() {
        let e = parse_dimacs("p edge 3 1\ne 1 1\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(matches!(e.kind, ParseErrorKind::Graph(GraphError::SelfLoop { .. })));

        let e = parse_edge_list("3\n1 1\n").unwrap_err();
        assert_eq!(e.line, 2);
    }

    #[test]
    fn duplicate_and_range_errors() {
        let e = parse_edge_list("3\n0 1\n1 0\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(matches!(e.kind, ParseErrorKind::Graph(GraphError::DuplicateEdge { .. })));

        let e = parse_dimacs("p edge 2 1\ne 1 3\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(matches!(e.kind, ParseErrorKind::Graph(GraphError::InvalidVertex { .. })));
    }

    #[test]
    fn dimacs_edge_count_must_match() {
        let e = parse_dimacs("p edge 3 2\ne 1 2\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::EdgeCountMismatch { declared: 2, found: 1 }));
    }

    #[test]
    fn missing_headers() {
        assert!(matches!(parse_edge_list("# nothing\n").unwrap_err().kind, ParseErrorKind::MissingHeader));
        assert!(matches!(parse_dimacs("c nothing\n").unwrap_err().kind, ParseErrorKind::MissingHeader));
        assert!(matches!(parse_dimacs("e 1 2\n").unwrap_err().kind, ParseErrorKind::BadHeader { .. }));
    }

    #[test]
    fn sniffing() {
        assert_eq!(sniff_format("c hi\np edge 1 0\n"), Format::Dimacs);
        assert_eq!(sniff_format("3\n0 1\n"), Format::EdgeList);
        assert_eq!(sniff_format("# comment\n3\n"), Format::EdgeList);
    }

    #[test]
    fn zero_vertices_rejected() {
        assert!(matches!(
            parse_edge_list("0\n").unwrap_err().kind,
            ParseErrorKind::Graph(GraphError::Empty)
        ));
        assert!(matches!(
            parse_dimacs("p edge 0 0\n").unwrap_err().kind,
            ParseErrorKind::Graph(GraphError::Empty)
        ));
    }
}
