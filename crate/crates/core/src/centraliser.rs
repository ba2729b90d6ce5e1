//! Symbolic centraliser shapes.
//!
//! For a power of a standard generator `x` the centraliser is `<x> × F_r`
//! with `r = |E(Γ̄_x)| + rk π₁(Γ̄_x)`, where `Γ̄_x` is the component of `x` in
//! the cut graph. Other elements are classified through an
//! [`ElementDescriptor`]: elliptic elements fixing a single dihedral vertex
//! are handled exactly by the dihedral word engine, loxodromic elements are
//! symbolic tags.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::dihedral::{self, DihedralError, DihedralWord, Gen};
use crate::graph::PresentationGraph;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CentraliserShape {
    CyclicZ,
    AbelianZ2,
    /// `Z × F_r` with `r >= 2`.
    CyclicTimesFree { free_rank: usize },
    /// The dihedral Artin group `A(m)`.
    DihedralArtin { m: u32 },
    /// A case the taxonomy names but that is not computed from words.
    Generic(String),
}

impl CentraliserShape {
    /// `Z × F_r`, folding `r = 0` to `Z` and `r = 1` to `Z²`.
    pub fn from_free_rank(r: usize) -> Self {
        match r {
            0 => CentraliserShape::CyclicZ,
            1 => CentraliserShape::AbelianZ2,
            r => CentraliserShape::CyclicTimesFree { free_rank: r },
        }
    }

    /// The `form` field of the JSON encoding.
    pub fn form(&self) -> &'static str {
        match self {
            CentraliserShape::CyclicZ => "Z",
            CentraliserShape::AbelianZ2 => "Z2",
            CentraliserShape::CyclicTimesFree { .. } => "ZxF",
            CentraliserShape::DihedralArtin { .. } => "dihedral",
            CentraliserShape::Generic(_) => "generic",
        }
    }

    pub fn is_zxf2(&self) -> bool {
        matches!(self, CentraliserShape::CyclicTimesFree { .. })
    }
}

impl fmt::Display for CentraliserShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CentraliserShape::CyclicZ => f.write_str("Z"),
            CentraliserShape::AbelianZ2 => f.write_str("Z^2"),
            CentraliserShape::CyclicTimesFree { free_rank } => write!(f, "Z x F_{free_rank}"),
            CentraliserShape::DihedralArtin { m } => write!(f, "A({m})"),
            CentraliserShape::Generic(tag) => write!(f, "generic({tag})"),
        }
    }
}

/// Why a shape was reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    IsolatedVertex,
    EvenLeaf { neighbour: String, m: u32 },
    IsolatedOddEdge { neighbour: String, m: u32 },
    RankFormula { edges: usize, cycle_rank: usize },
    Central,
    CentralPower(u64),
    NoCentralPower,
    ConjugateToGeneratorPower { vertex: String, exponent: i64, inner: Box<Justification> },
    Loxodromic { tree: TransverseTree, axis_in_standard_tree: bool },
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::IsolatedVertex => f.write_str("isolated vertex: cut-graph component has no edges"),
            Justification::EvenLeaf { neighbour, m } => {
                write!(f, "even leaf: single edge to {neighbour} labelled {m}, rank 1")
            }
            Justification::IsolatedOddEdge { neighbour, m } => write!(
                f,
                "isolated odd edge: component is the single edge to {neighbour} labelled {m}, rank 1"
            ),
            Justification::RankFormula { edges, cycle_rank } => write!(
                f,
                "rank formula: {edges} cut-graph edges + cycle rank {cycle_rank} = {}",
                edges + cycle_rank
            ),
            Justification::Central => f.write_str("central in the dihedral parabolic"),
            Justification::CentralPower(n) => write!(f, "power {n} is central, no smaller power is"),
            Justification::NoCentralPower => f.write_str("no non-zero power is central"),
            Justification::ConjugateToGeneratorPower {
                vertex,
                exponent,
                inner,
            } => write!(f, "conjugate to {vertex}^{exponent}; {inner}"),
            Justification::Loxodromic {
                tree,
                axis_in_standard_tree,
            } => write!(
                f,
                "loxodromic, {tree} transverse tree, {} axis in a standard tree",
                if *axis_in_standard_tree { "some" } else { "no" }
            ),
        }
    }
}

/// A shape together with its justification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Centraliser {
    pub shape: CentraliserShape,
    pub justification: Justification,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CentraliserJson<'a> {
    form: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    free_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tag: Option<&'a str>,
    justification: String,
}

impl Serialize for Centraliser {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let (free_rank, m, tag) = match &self.shape {
            CentraliserShape::CyclicTimesFree { free_rank } => (Some(*free_rank), None, None),
            CentraliserShape::DihedralArtin { m } => (None, Some(*m), None),
            CentraliserShape::Generic(tag) => (None, None, Some(tag.as_str())),
            _ => (None, None, None),
        };
        CentraliserJson {
            form: self.shape.form(),
            free_rank,
            m,
            tag,
            justification: self.justification.to_string(),
        }
        .serialize(serializer)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TransverseTree {
    Bounded,
    Line,
}

impl fmt::Display for TransverseTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TransverseTree::Bounded => "bounded",
            TransverseTree::Line => "line",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementDescriptor {
    /// `x^exponent` for a vertex `x`.
    GeneratorPower { generator: String, exponent: i64 },
    /// An element of the dihedral parabolic `A_{uv}`, written with `a = u`, `b = v`.
    DihedralElliptic { edge: (String, String), word: DihedralWord },
    Hyperbolic { transverse_tree: TransverseTree, axis_in_standard_tree: bool },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CentraliserError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("the rank formula needs a two-dimensional or large-type graph")]
    OutsideHypothesis,
    #[error("the graph is not of large type")]
    NotLargeType,
    #[error("exponent must be non-zero")]
    ZeroExponent,
    #[error("no edge between `{0}` and `{1}`")]
    UnknownEdge(String, String),
    #[error("word lives in A({word}) but the edge is labelled {edge}")]
    LabelMismatch { word: u32, edge: u32 },
    #[error(transparent)]
    Dihedral(#[from] DihedralError),
}

fn require_vertex(g: &PresentationGraph, x: &str) -> Result<usize, CentraliserError> {
    g.index_of(x)
        .ok_or_else(|| CentraliserError::UnknownVertex(x.to_string()))
}

/// Centraliser of any non-trivial power of the standard generator `x`.
pub fn generator_centraliser(
    g: &PresentationGraph,
    x: &str,
) -> Result<CentraliserShape, CentraliserError> {
    Ok(explain_generator_centraliser(g, x)?.shape)
}

/// [`generator_centraliser`] with the clause that produced it.
pub fn explain_generator_centraliser(
    g: &PresentationGraph,
    x: &str,
) -> Result<Centraliser, CentraliserError> {
    let i = require_vertex(g, x)?;
    if !(g.is_two_dimensional() || g.is_large_type()) {
        return Err(CentraliserError::OutsideHypothesis);
    }
    let component = g
        .cut_graph()
        .graph
        .component_of(x)
        .expect("vertex checked above");
    let edges = component.edge_count();
    let cycle_rank = component.cycle_rank();
    let r = edges + cycle_rank;
    let justification = match r {
        0 => Justification::IsolatedVertex,
        1 => {
            let (j, m) = g.neighbours(i)[0];
            let neighbour = g.name(j).to_string();
            if m % 2 == 0 {
                Justification::EvenLeaf { neighbour, m }
            } else {
                Justification::IsolatedOddEdge { neighbour, m }
            }
        }
        _ => Justification::RankFormula { edges, cycle_rank },
    };
    Ok(Centraliser {
        shape: CentraliserShape::from_free_rank(r),
        justification,
    })
}

/// Answer of [`has_zxf2_centraliser`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZxF2Verdict {
    pub holds: bool,
    pub centraliser: Centraliser,
    /// Set when the generator is neither isolated nor an even leaf, yet the
    /// centraliser is not of the form `Z × F_{>=2}`.
    pub warning: Option<String>,
}

/// Whether `C(x^n)` is `Z × F_r` with `r >= 2`. Does not depend on `n`.
pub fn has_zxf2_centraliser(
    g: &PresentationGraph,
    x: &str,
    n: i64,
) -> Result<ZxF2Verdict, CentraliserError> {
    require_vertex(g, x)?;
    if n == 0 {
        return Err(CentraliserError::ZeroExponent);
    }
    if !g.is_large_type() {
        return Err(CentraliserError::NotLargeType);
    }
    let centraliser = explain_generator_centraliser(g, x)?;
    let warning = match &centraliser.justification {
        Justification::IsolatedOddEdge { neighbour, m } => Some(format!(
            "{x} lies on an isolated odd-labelled edge (to {neighbour}, label {m}): \
             the centraliser is Z^2 although {x} is neither an isolated vertex \
             nor a leaf of an even-labelled edge"
        )),
        _ => None,
    };
    Ok(ZxF2Verdict {
        holds: centraliser.shape.is_zxf2(),
        centraliser,
        warning,
    })
}

/// Shape for a loxodromic element from its transverse tree and axes.
pub fn hyperbolic_shape(tree: TransverseTree, axis_in_standard_tree: bool) -> CentraliserShape {
    match (tree, axis_in_standard_tree) {
        (TransverseTree::Bounded, true) => CentraliserShape::AbelianZ2,
        (TransverseTree::Bounded, false) => CentraliserShape::CyclicZ,
        // <x, y | xyxy = yxyx>
        (TransverseTree::Line, true) => CentraliserShape::DihedralArtin { m: 4 },
        (TransverseTree::Line, false) => CentraliserShape::AbelianZ2,
    }
}

/// Centraliser of the element described by `d` in the large-type group `A_G`.
///
/// A dihedral element conjugate to a generator power fixes a whole standard
/// tree rather than a single vertex, so it is reported through the rank
/// formula for that generator.
pub fn classify_centraliser(
    g: &PresentationGraph,
    d: &ElementDescriptor,
) -> Result<Centraliser, CentraliserError> {
    match d {
        ElementDescriptor::GeneratorPower {
            generator,
            exponent,
        } => {
            if *exponent == 0 {
                return Err(CentraliserError::ZeroExponent);
            }
            explain_generator_centraliser(g, generator)
        }
        ElementDescriptor::DihedralElliptic { edge, word } => {
            if !g.is_large_type() {
                return Err(CentraliserError::NotLargeType);
            }
            require_vertex(g, &edge.0)?;
            require_vertex(g, &edge.1)?;
            let m = g
                .label(&edge.0, &edge.1)
                .ok_or_else(|| CentraliserError::UnknownEdge(edge.0.clone(), edge.1.clone()))?;
            if word.m() != m {
                return Err(CentraliserError::LabelMismatch {
                    word: word.m(),
                    edge: m,
                });
            }
            if let Some(wit) = dihedral::is_conjugate_to_generator_power(word)? {
                let vertex = match wit.generator {
                    Gen::A => &edge.0,
                    Gen::B => &edge.1,
                };
                let inner = explain_generator_centraliser(g, vertex)?;
                return Ok(Centraliser {
                    shape: inner.shape,
                    justification: Justification::ConjugateToGeneratorPower {
                        vertex: vertex.clone(),
                        exponent: wit.exponent,
                        inner: Box::new(inner.justification),
                    },
                });
            }
            Ok(dihedral::explain_dihedral_centraliser(word)?)
        }
        ElementDescriptor::Hyperbolic {
            transverse_tree,
            axis_in_standard_tree,
        } => {
            if !g.is_large_type() {
                return Err(CentraliserError::NotLargeType);
            }
            Ok(Centraliser {
                shape: hyperbolic_shape(*transverse_tree, *axis_in_standard_tree),
                justification: Justification::Loxodromic {
                    tree: *transverse_tree,
                    axis_in_standard_tree: *axis_in_standard_tree,
                },
            })
        }
    }
}

/// A loxodromic element of the `(3, 3, 3)` triangle group with known data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogueEntry {
    pub element: &'static str,
    pub transverse_tree: TransverseTree,
    pub axis_in_standard_tree: bool,
    pub shape: CentraliserShape,
}

/// The loxodromic examples in the `(3, 3, 3)` Artin group on `a, b, c`.
pub fn hyperbolic_catalogue() -> Vec<CatalogueEntry> {
    [
        ("b^n abcabc (n != 0)", TransverseTree::Bounded, true),
        ("(ab^-1)^n (cb^-1)^n (n large)", TransverseTree::Bounded, false),
        ("abcabc", TransverseTree::Line, true),
        ("babc", TransverseTree::Line, false),
    ]
    .into_iter()
    .map(|(element, tree, axis)| CatalogueEntry {
        element,
        transverse_tree: tree,
        axis_in_standard_tree: axis,
        shape: hyperbolic_shape(tree, axis),
    })
    .collect()
}
