//! The line-oriented `.fzg` text format.
//!
//! ```text
//! # comment
//! v a 1
//! v b 0.5
//! e a b 0.25
//! ```
//!
//! A `v` line must appear before any `e` line that references it.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{FuzzyGraph, GraphBuilder, VertexId};
use crate::membership::Membership;

/// Parse `.fzg` text. Errors carry the 1-based line number.
pub fn parse_graph(text: &str) -> Result<FuzzyGraph> {
    let mut builder = GraphBuilder::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let at_line = |e: Error| match e {
            Error::Syntax { .. } => e,
            other => Error::AtLine {
                line,
                source: Box::new(other),
            },
        };
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match tokens.as_slice() {
            ["v", name, sigma] => {
                let id = VertexId::new(*name).map_err(at_line)?;
                let sigma = grade(sigma, line)?;
                builder.add_vertex(id, sigma).map_err(at_line)?;
            }
            ["e", u, v, mu] => {
                let u = VertexId::new(*u).map_err(at_line)?;
                let v = VertexId::new(*v).map_err(at_line)?;
                let mu = grade(mu, line)?;
                builder.add_edge(u, v, mu).map_err(at_line)?;
            }
            ["v", ..] => return Err(syntax(line, "expected `v <name> <sigma>`")),
            ["e", ..] => return Err(syntax(line, "expected `e <name1> <name2> <mu>`")),
            [other, ..] => return Err(syntax(line, &format!("unknown record type `{other}`"))),
            [] => unreachable!("blank lines are skipped"),
        }
    }
    Ok(builder.build())
}

/// Parse `.fzg` bytes, rejecting invalid UTF-8.
pub fn parse_graph_bytes(bytes: &[u8]) -> Result<FuzzyGraph> {
    match std::str::from_utf8(bytes) {
        Ok(text) => parse_graph(text),
        Err(e) => {
            let line = bytes[..e.valid_up_to()].iter().filter(|&&b| b == b'\n').count() + 1;
            Err(syntax(line, "invalid UTF-8"))
        }
    }
}

/// Canonical `.fzg` text: vertices, then edges, both in lexicographic order.
pub fn to_fzg(g: &FuzzyGraph) -> String {
    let mut out = String::new();
    for (id, sigma) in g.vertices() {
        writeln!(out, "v {id} {sigma}").unwrap();
    }
    for e in g.edges() {
        writeln!(out, "e {} {} {}", e.u, e.v, e.mu).unwrap();
    }
    out
}

fn grade(token: &str, line: usize) -> Result<Membership> {
    token
        .parse()
        .map_err(|_| syntax(line, &format!("bad grade `{token}` (decimal in [0,1], at most 6 fractional digits)")))
}

fn syntax(line: usize, message: &str) -> Error {
    Error::Syntax {
        line,
        message: message.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_single_edge() {
        let g = parse_graph("v a 1\nv b 1\ne a b 0.1").unwrap();
        assert_eq!(g.mu("a", "b").unwrap().micros(), 100_000);
    }

    #[test]
    fn edge_before_vertices_is_unknown_endpoint() {
        let e = parse_graph("e a b 0.1").unwrap_err();
        assert_eq!(e.line(), Some(1));
        assert_eq!(e.root(), &Error::UnknownEndpoint("a".into()));
    }

    #[test]
    fn skips_comments_and_blank_lines() {
        let g = parse_graph("# header\n\n  v a 1\n\t# indented comment\nv b 0.5\ne b a 0.5\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn syntax_errors_report_line() {
        let e = parse_graph("v a 1\nv b\n").unwrap_err();
        assert!(matches!(e, Error::Syntax { line: 2, .. }));
        let e = parse_graph("v a 1\nx a\n").unwrap_err();
        assert!(matches!(e, Error::Syntax { line: 2, .. }));
        let e = parse_graph("v a 1.5\n").unwrap_err();
        assert!(matches!(e, Error::Syntax { line: 1, .. }));
        let e = parse_graph("v a 1\nv b 0.4\ne a b 0.5\n").unwrap_err();
        assert_eq!(e.line(), Some(3));
        assert!(matches!(e.root(), Error::MuExceedsSigma { .. }));
    }

    #[test]
    fn invalid_utf8_is_a_syntax_error() {
        let e = parse_graph_bytes(b"v a 1\nv \xff 1\n").unwrap_err();
        assert!(matches!(e, Error::Syntax { line: 2, .. }));
    }

    #[test]
    fn canonical_output() {
        let g = parse_graph("v b 1\nv a 0.50\ne b a 0.25\n").unwrap();
        assert_eq!(to_fzg(&g), "v a 0.5\nv b 1\ne a b 0.25\n");
    }
}
