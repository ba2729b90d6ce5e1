use std::fmt;

use super::{GraphError, PresentationGraph};

/// A word in the standard generators of a presentation graph, stored as
/// `(generator, exponent)` syllables.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GraphWord {
    pub syllables: Vec<(String, i64)>,
}

impl GraphWord {
    /// Parses whitespace separated tokens `x`, `x^-1`, `x^k` or `x⁻¹`, checking
    /// every generator against `graph`.
    pub fn parse(text: &str, graph: &PresentationGraph) -> Result<Self, GraphError> {
        let mut syllables = Vec::new();
        for token in text.split_whitespace() {
            let (name, exp) = if let Some(name) = token.strip_suffix("⁻¹") {
                (name, -1)
            } else if let Some((name, exp)) = token.split_once('^') {
                let exp: i64 = exp
                    .parse()
                    .map_err(|_| GraphError::BadToken(token.to_string()))?;
                (name, exp)
            } else {
                (token, 1)
            };
            if !graph.contains_vertex(name) {
                return Err(GraphError::UnknownGenerator(name.to_string()));
            }
            syllables.push((name.to_string(), exp));
        }
        Ok(Self { syllables })
    }

    /// The alternating product `u v u v ...` with `len` letters.
    pub fn alternating(u: &str, v: &str, len: u32) -> Self {
        let syllables = (0..len)
            .map(|k| (if k % 2 == 0 { u } else { v }.to_string(), 1))
            .collect();
        Self { syllables }
    }
}

impl fmt::Display for GraphWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .syllables
            .iter()
            .map(|(g, e)| if *e == 1 { g.clone() } else { format!("{g}^{e}") })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// The homomorphism `A_Γ -> <y> ≅ Z` sending `y` to a generator of `Z` and
/// every other standard generator to the identity.
///
/// Only constructible via [`PresentationGraph::even_leaf_retraction`]: when the
/// edge at `y` has odd label `m`, the relation forces the exponent of `y` to be
/// both `(m+1)/2` and `(m-1)/2`, so no such homomorphism exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafRetraction {
    target: String,
}

impl LeafRetraction {
    pub(super) fn new(target: String) -> Self {
        Self { target }
    }

    pub fn target(&self) -> &str {
        &self.target
    }

    /// Signed exponent sum of the target generator.
    pub fn evaluate(&self, word: &GraphWord) -> i64 {
        word.syllables
            .iter()
            .filter(|(g, _)| *g == self.target)
            .map(|(_, e)| e)
            .sum()
    }

    /// Both sides of every defining relation of `graph` evaluate equally.
    pub fn respects_relations(&self, graph: &PresentationGraph) -> bool {
        graph.edges().all(|(u, v, m)| {
            self.evaluate(&GraphWord::alternating(u, v, m))
                == self.evaluate(&GraphWord::alternating(v, u, m))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn outer() -> PresentationGraph {
        parse_graph("gen x\ngen y\ngen z\nrel x y 2\nrel x z 3").unwrap()
    }

    #[test]
    fn evaluates_exponent_of_leaf() {
        let g = outer();
        let f = g.even_leaf_retraction("y").unwrap();
        let w = GraphWord::parse("z x y y⁻¹ y", &g).unwrap();
        assert_eq!(f.evaluate(&w), 1);
        let w = GraphWord::parse("z x^3 z^-2 x^-1", &g).unwrap();
        assert_eq!(f.evaluate(&w), 0);
        assert!(f.respects_relations(&g));
    }

    #[test]
    fn word_parse_errors() {
        let g = outer();
        assert!(matches!(
            GraphWord::parse("x q", &g),
            Err(GraphError::UnknownGenerator(_))
        ));
        assert!(matches!(
            GraphWord::parse("x^z", &g),
            Err(GraphError::BadToken(_))
        ));
    }

    #[test]
    fn odd_leaf_would_break_relation() {
        // the map an odd leaf would need is not a homomorphism
        let g = outer();
        let bogus = LeafRetraction::new("z".into());
        assert!(!bogus.respects_relations(&g));
        assert!(g.even_leaf_retraction("z").is_err());
    }
}
