//! Line-oriented hypergraph text format.
//!
//! ```text
//! # comment
//! e1(A,B,C)
//! C D
//! @nodes A B C D Z
//! ```

use std::collections::HashSet;

use log::warn;
use thiserror::Error;

use crate::error::HypergraphError;
use crate::hypergraph::{valid_name, Hypergraph, Universe};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: empty hyperedge")]
    EmptyEdge { line: usize },
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

struct RawEdge {
    name: Option<String>,
    members: Vec<String>,
}

fn malformed(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Malformed {
        line,
        message: message.into(),
    }
}

fn names(line: usize, list: &str) -> Result<Vec<String>, ParseError> {
    let mut out = Vec::new();
    for tok in list.split(|c: char| c == ',' || c.is_whitespace()) {
        if tok.is_empty() {
            continue;
        }
        if !valid_name(tok) {
            return Err(malformed(line, format!("invalid node name {tok:?}")));
        }
        out.push(tok.to_string());
    }
    Ok(out)
}

pub fn parse_hypergraph(src: &str) -> Result<Hypergraph, ParseError> {
    let mut edges: Vec<RawEdge> = Vec::new();
    let mut declared: Vec<String> = Vec::new();
    let mut seen: HashSet<Vec<String>> = HashSet::new();
    for (i, raw) in src.lines().enumerate() {
        let line = i + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        if let Some(rest) = text.strip_prefix("@nodes") {
            declared.extend(names(line, rest)?);
            continue;
        }
        let edge = if let Some(open) = text.find('(') {
            let name = text[..open].trim();
            if !valid_name(name) {
                return Err(malformed(line, format!("invalid edge name {name:?}")));
            }
            let body = &text[open + 1..];
            let close = body
                .find(')')
                .ok_or_else(|| malformed(line, "missing ')'"))?;
            let tail = body[close + 1..].trim();
            if !matches!(tail, "" | "," | ".") {
                return Err(malformed(
                    line,
                    format!("unexpected text after ')': {tail:?}"),
                ));
            }
            RawEdge {
                name: Some(name.to_string()),
                members: names(line, &body[..close])?,
            }
        } else {
            if text.contains(')') {
                return Err(malformed(line, "unexpected ')'"));
            }
            RawEdge {
                name: None,
                members: names(line, text)?,
            }
        };
        if edge.members.is_empty() {
            return Err(ParseError::EmptyEdge { line });
        }
        let mut key = edge.members.clone();
        key.sort();
        key.dedup();
        if !seen.insert(key) {
            warn!("line {line}: duplicate hyperedge ignored");
        }
        edges.push(edge);
    }
    let universe = Universe::new(
        edges
            .iter()
            .flat_map(|e| e.members.iter().cloned())
            .chain(declared.iter().cloned()),
    )?;
    let mut named = Vec::with_capacity(edges.len());
    for e in edges {
        named.push((e.name, universe.set(&e.members)?));
    }
    let nodes = universe.all();
    Ok(Hypergraph::from_named(universe, nodes, named)?)
}

pub fn print_hypergraph(h: &Hypergraph) -> String {
    h.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_and_bare_lines() {
        let h = parse_hypergraph("e1(A,B,C)\ne2(C,D)").unwrap();
        assert_eq!(h.num_edges(), 2);
        assert_eq!(h.named_nodes(), vec!["A", "B", "C", "D"]);
        let g = parse_hypergraph("# comment\nA B C\n\nC,D.\n").unwrap_err();
        assert!(matches!(g, ParseError::Malformed { line: 4, .. }));
        let g = parse_hypergraph("# comment\nA B C   # trailing\nC D\n").unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_hypergraph("e(").unwrap_err(),
            malformed(1, "missing ')'")
        );
        assert_eq!(
            parse_hypergraph("a(A)\nb()").unwrap_err(),
            ParseError::EmptyEdge { line: 2 }
        );
        assert!(matches!(
            parse_hypergraph("a(A-B)").unwrap_err(),
            ParseError::Malformed { line: 1, .. }
        ));
    }

    #[test]
    fn trailing_punctuation_and_duplicates() {
        let h = parse_hypergraph("a(A,B),\nb(B,A).\n").unwrap();
        assert_eq!(h.num_edges(), 1);
        assert_eq!(h.edge_names(), ["a"]);
    }

    #[test]
    fn round_trip_with_isolated_nodes() {
        let h = parse_hypergraph("@nodes Z\nx(A,B)\n").unwrap();
        assert_eq!(h.isolated().len(), 1);
        let again = parse_hypergraph(&print_hypergraph(&h)).unwrap();
        assert_eq!(again, h);
        assert_eq!(again.edge_names(), h.edge_names());
    }
}
