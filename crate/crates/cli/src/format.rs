//! Graph file formats.
//!
//! * DIMACS edge format: `c` comment lines, one `p edge <n> <m>` header,
//!   then `e <u> <v>` lines with 1-based ids.
//! * Bare edge list: one `u v` pair per line, 0-based ids, `#` comments;
//!   the vertex count is the largest id plus one.
//!
//! Both reject self-loops and repeated edges.

use std::fmt::Write as _;

use blossom_core::{Error as CoreError, Graph, Vertex};

use crate::CliError;

/// Vertex counts above this are refused before allocating anything.
pub const MAX_VERTICES: usize = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// DIMACS if the file has a `p` line, else edge list.
    Auto,
    Dimacs,
    Edges,
}

fn parse_error(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse { line, message: message.into() }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize, CliError> {
    let tok = tok.ok_or_else(|| parse_error(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_error(line, format!("{what} `{tok}` is not a non-negative integer")))
}

fn no_trailing<'a>(mut toks: impl Iterator<Item = &'a str>, line: usize) -> Result<(), CliError> {
    match toks.next() {
        Some(t) => Err(parse_error(line, format!("unexpected token `{t}`"))),
        None => Ok(()),
    }
}

fn capacity(n: usize) -> Result<(), CliError> {
    if n > MAX_VERTICES {
        return Err(CliError::Core(CoreError::Capacity {
            what: "vertex count",
            limit: MAX_VERTICES,
            actual: n,
        }));
    }
    Ok(())
}

/// Builds the graph, attributing a rejected edge to the line it came from.
fn build(n: usize, edges: Vec<(Vertex, Vertex)>, lines: &[usize]) -> Result<Graph, CliError> {
    capacity(n)?;
    let mut seen = std::collections::BTreeSet::new();
    for (&(u, v), &line) in edges.iter().zip(lines) {
        if u == v {
            return Err(parse_error(line, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_error(line, format!("duplicate edge {{{u}, {v}}}")));
        }
    }
    Graph::new(n, edges).map_err(CliError::Core)
}

pub fn parse(text: &str, format: Format) -> Result<Graph, CliError> {
    match format {
        Format::Dimacs => parse_dimacs(text),
        Format::Edges => parse_edge_list(text),
        Format::Auto => {
            let is_dimacs = text.lines().any(|l| l.trim_start().starts_with("p "));
            if is_dimacs {
                parse_dimacs(text)
            } else {
                parse_edge_list(text)
            }
        }
    }
}

pub fn parse_dimacs(text: &str) -> Result<Graph, CliError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(parse_error(line, "second `p` line"));
                }
                match toks.next() {
                    Some("edge") | Some("edges") | Some("col") => {}
                    Some(other) => return Err(parse_error(line, format!("unsupported problem `{other}`"))),
                    None => return Err(parse_error(line, "missing problem name")),
                }
                let n = number(toks.next(), line, "vertex count")?;
                let m = number(toks.next(), line, "edge count")?;
                no_trailing(toks, line)?;
                capacity(n)?;
                header = Some((n, m, line));
            }
            Some("e") => {
                let Some((n, _, _)) = header else {
                    return Err(parse_error(line, "edge before the `p` line"));
                };
                let u = number(toks.next(), line, "first endpoint")?;
                let v = number(toks.next(), line, "second endpoint")?;
                no_trailing(toks, line)?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(parse_error(line, format!("vertex {x} outside 1..={n}")));
                    }
                }
                edges.push((u - 1, v - 1));
                lines.push(line);
            }
            Some(other) => return Err(parse_error(line, format!("unknown line type `{other}`"))),
        }
    }
    let Some((n, m, header_line)) = header else {
        return Err(parse_error(text.lines().count().max(1), "missing `p edge <n> <m>` line"));
    };
    if edges.len() != m {
        return Err(parse_error(
            header_line,
            format!("header announces {m} edges but {} were given", edges.len()),
        ));
    }
    build(n, edges, &lines)
}

pub fn parse_edge_list(text: &str) -> Result<Graph, CliError> {
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        let mut toks = body.split_whitespace();
        let Some(first) = toks.next() else { continue };
        let u = number(Some(first), line, "first endpoint")?;
        let v = number(toks.next(), line, "second endpoint")?;
        no_trailing(toks, line)?;
        capacity(u.max(v))?;
        edges.push((u, v));
        lines.push(line);
    }
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    build(n, edges, &lines)
}

pub fn emit(g: &Graph, format: Format) -> String {
    match format {
        Format::Dimacs | Format::Auto => emit_dimacs(g),
        Format::Edges => emit_edge_list(g),
    }
}

pub fn emit_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(out, "e {} {}", e.lo() + 1, e.hi() + 1);
    }
    out
}

/// Isolated vertices above the largest endpoint are not representable.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.lo(), e.hi());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line_of(err: CliError) -> usize {
        match err {
            CliError::Parse { line, .. } => line,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn dimacs_is_one_based() {
        let g = parse_dimacs("c path\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n").unwrap();
        assert_eq!(g.n(), 4);
        assert!(g.has_edge(0, 1) && g.has_edge(2, 3));
    }

    #[test]
    fn dimacs_header_only() {
        let g = parse_dimacs("p edge 3 0\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 0));
    }

    #[test]
    fn dimacs_errors_name_the_line() {
        assert_eq!(line_of(parse_dimacs("p edge 2 1\ne 1\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_dimacs("p edge 2 1\ne 1 1\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_dimacs("p edge 3 2\ne 1 2\ne 2 1\n").unwrap_err()), 3);
        assert_eq!(line_of(parse_dimacs("p edge 2 1\ne 0 1\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_dimacs("p edge 2 1\ne 1 3\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_dimacs("e 1 2\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_dimacs("c x\np edge 2 2\ne 1 2\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_dimacs("p edge 2 0\nx\n").unwrap_err()), 2);
    }

    #[test]
    fn edge_list_is_zero_based() {
        let g = parse_edge_list("# P4\n0 1\n1 2\n\n2 3 # tail\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (4, 3));
        assert!(g.has_edge(0, 1));
        assert_eq!(parse_edge_list("").unwrap().n(), 0);
    }

    #[test]
    fn edge_list_errors_name_the_line() {
        assert_eq!(line_of(parse_edge_list("0 1\n1 1\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_edge_list("0 1\n1 0\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_edge_list("0 -1\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_edge_list("0 1 2\n").unwrap_err()), 1);
    }

    #[test]
    fn auto_detects_dimacs() {
        let g = parse("p edge 2 1\ne 1 2\n", Format::Auto).unwrap();
        assert!(g.has_edge(0, 1));
        let g = parse("0 1\n", Format::Auto).unwrap();
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn huge_ids_hit_the_capacity_guard() {
        assert!(matches!(
            parse_edge_list("0 99999999999\n"),
            Err(CliError::Core(CoreError::Capacity { .. }))
        ));
    }
}
