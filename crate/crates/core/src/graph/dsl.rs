//! Line-oriented text format for presentation graphs.
//!
//! ```text
//! # triangle with all labels 3
//! gen a
//! gen b
//! gen c
//! rel a b 3
//! rel a c 3
//! rel b c 3
//! ```
//!
//! Vertices must be declared with `gen` before a `rel` line uses them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

use super::{is_valid_name, PresentationGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unknown directive `{0}` (expected `gen` or `rel`)")]
    UnknownDirective(String),
    #[error("`{directive}` takes {expected} argument(s), found {found}")]
    Arity {
        directive: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("invalid generator name `{0}`")]
    InvalidName(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}` in edge")]
    UnknownVertex(String),
    #[error("loop edge at `{0}`")]
    LoopEdge(String),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(String, String),
    #[error("label `{0}` is not an integer")]
    NonIntegerLabel(String),
    #[error("label {0} is smaller than 2")]
    LabelTooSmall(i64),
    #[error("label {0} is too large")]
    LabelOutOfRange(i64),
}

pub fn parse_graph(text: &str) -> Result<PresentationGraph, ParseError> {
    let mut vertices: BTreeSet<String> = BTreeSet::new();
    let mut edges: BTreeMap<(String, String), u32> = BTreeMap::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let err = |kind| ParseError { line, kind };
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((&directive, args)) = tokens.split_first() else {
            continue;
        };
        match directive {
            "gen" => {
                if args.len() != 1 {
                    return Err(err(ParseErrorKind::Arity {
                        directive: "gen",
                        expected: 1,
                        found: args.len(),
                    }));
                }
                let name = args[0];
                if !is_valid_name(name) {
                    return Err(err(ParseErrorKind::InvalidName(name.to_string())));
                }
                if !vertices.insert(name.to_string()) {
                    return Err(err(ParseErrorKind::DuplicateVertex(name.to_string())));
                }
            }
            "rel" => {
                if args.len() != 3 {
                    return Err(err(ParseErrorKind::Arity {
                        directive: "rel",
                        expected: 3,
                        found: args.len(),
                    }));
                }
                let (u, v) = (args[0], args[1]);
                for name in [u, v] {
                    if !vertices.contains(name) {
                        return Err(err(ParseErrorKind::UnknownVertex(name.to_string())));
                    }
                }
                if u == v {
                    return Err(err(ParseErrorKind::LoopEdge(u.to_string())));
                }
                let label: i64 = args[2]
                    .parse()
                    .map_err(|_| err(ParseErrorKind::NonIntegerLabel(args[2].to_string())))?;
                if label < 2 {
                    return Err(err(ParseErrorKind::LabelTooSmall(label)));
                }
                let label =
                    u32::try_from(label).map_err(|_| err(ParseErrorKind::LabelOutOfRange(label)))?;
                let key = if u < v {
                    (u.to_string(), v.to_string())
                } else {
                    (v.to_string(), u.to_string())
                };
                if edges.contains_key(&key) {
                    return Err(err(ParseErrorKind::DuplicateEdge(key.0, key.1)));
                }
                edges.insert(key, label);
            }
            other => return Err(err(ParseErrorKind::UnknownDirective(other.to_string()))),
        }
    }

    let edges: Vec<(String, String, u32)> =
        edges.into_iter().map(|((u, v), m)| (u, v, m)).collect();
    // Every violation the constructor checks has been reported with a line above.
    Ok(PresentationGraph::new(vertices, edges).expect("validated while parsing"))
}

/// Emits `gen` lines in name order followed by `rel` lines in edge order.
pub fn serialize_graph(graph: &PresentationGraph) -> String {
    let mut out = String::new();
    for v in graph.vertices() {
        let _ = writeln!(out, "gen {v}");
    }
    for (u, v, m) in graph.edges() {
        let _ = writeln!(out, "rel {u} {v} {m}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kind(text: &str) -> (usize, ParseErrorKind) {
        let e = parse_graph(text).unwrap_err();
        (e.line, e.kind)
    }

    #[test]
    fn parses_single_edge() {
        let g = parse_graph("gen a\ngen b\nrel a b 3").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.label("a", "b"), Some(3));
        assert_eq!(g.label("b", "a"), Some(3));
    }

    #[test]
    fn parses_isolated_vertex() {
        let g = parse_graph("gen a").unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("# header\n\ngen a   # trailing\n  gen b\nrel b a 7\n").unwrap();
        assert_eq!(g.label("a", "b"), Some(7));
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(kind("gen a\nrel a a 3"), (2, ParseErrorKind::LoopEdge("a".into())));
        assert_eq!(
            kind("gen a\ngen a"),
            (2, ParseErrorKind::DuplicateVertex("a".into()))
        );
        assert_eq!(
            kind("gen a\nrel a b 3"),
            (2, ParseErrorKind::UnknownVertex("b".into()))
        );
        assert_eq!(
            kind("gen a\ngen b\nrel a b 1"),
            (3, ParseErrorKind::LabelTooSmall(1))
        );
        assert_eq!(
            kind("gen a\ngen b\nrel a b x"),
            (3, ParseErrorKind::NonIntegerLabel("x".into()))
        );
        assert_eq!(
            kind("gen a\ngen b\nrel a b 2.5"),
            (3, ParseErrorKind::NonIntegerLabel("2.5".into()))
        );
        assert_eq!(
            kind("gen a\ngen b\nrel a b 3\nrel b a 4"),
            (4, ParseErrorKind::DuplicateEdge("a".into(), "b".into()))
        );
        assert_eq!(
            kind("gen a\ngen b\nrel a b 99999999999"),
            (3, ParseErrorKind::LabelOutOfRange(99999999999))
        );
        assert!(matches!(kind("gen 9a").1, ParseErrorKind::InvalidName(_)));
        assert!(matches!(kind("edge a b").1, ParseErrorKind::UnknownDirective(_)));
        assert!(matches!(kind("gen a b").1, ParseErrorKind::Arity { .. }));
        assert!(matches!(kind("gen a\ngen b\nrel a b").1, ParseErrorKind::Arity { .. }));
    }

    #[test]
    fn serialization_is_sorted() {
        let g = parse_graph("gen c\ngen a\ngen b\nrel c a 4\nrel b a 3").unwrap();
        assert_eq!(
            serialize_graph(&g),
            "gen a\ngen b\ngen c\nrel a b 3\nrel a c 4\n"
        );
    }
}
