use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::graph::{EdgeKind, PresentationGraph};

/// The group property that a 2-labelled edge of a given kind exhibits and
/// that no large-type Artin group has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SeparatingProperty {
    /// An isolated `Z²` subgroup (isolated edge).
    IsolatedZ2,
    /// A quotient onto `Z` killing the dihedral generators (outer edge).
    P1,
    /// Commuting generators inside larger centralisers (inner edge).
    P2,
}

impl SeparatingProperty {
    pub fn for_kind(kind: EdgeKind) -> Self {
        match kind {
            EdgeKind::Isolated => SeparatingProperty::IsolatedZ2,
            EdgeKind::Outer => SeparatingProperty::P1,
            EdgeKind::Inner => SeparatingProperty::P2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GateVerdict {
    LargeType,
    /// Contains a triangle spanning a spherical parabolic subgroup.
    NotTwoDimensional { triangle: [String; 3], labels: [u32; 3] },
    NotLargeType {
        witness: (String, String),
        kind: EdgeKind,
        property: SeparatingProperty,
    },
    /// No edges: a free group.
    VacuousDiscrete,
}

impl GateVerdict {
    pub fn tag(&self) -> &'static str {
        match self {
            GateVerdict::LargeType => "large-type",
            GateVerdict::NotTwoDimensional { .. } => "not-2d",
            GateVerdict::NotLargeType { .. } => "not-large-type",
            GateVerdict::VacuousDiscrete => "discrete",
        }
    }
}

const NOT_2D_REASON: &str = "contains a spherical triangle; no conclusion through the edge-2 \
     criteria, which compare against two-dimensional targets only";

#[derive(Serialize)]
struct EdgeWitness<'a> {
    edge: [&'a str; 2],
    kind: EdgeKind,
    property: SeparatingProperty,
}

#[derive(Serialize)]
struct TriangleWitness<'a> {
    triangle: &'a [String; 3],
    labels: &'a [u32; 3],
    reason: &'static str,
}

impl Serialize for GateVerdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("gate", self.tag())?;
        match self {
            GateVerdict::NotTwoDimensional { triangle, labels } => map.serialize_entry(
                "witness",
                &TriangleWitness {
                    triangle,
                    labels,
                    reason: NOT_2D_REASON,
                },
            )?,
            GateVerdict::NotLargeType {
                witness,
                kind,
                property,
            } => map.serialize_entry(
                "witness",
                &EdgeWitness {
                    edge: [&witness.0, &witness.1],
                    kind: *kind,
                    property: *property,
                },
            )?,
            _ => {}
        }
        map.end()
    }
}

/// Decides whether `A_G` can be isomorphic to a large-type Artin group,
/// naming the first 2-labelled edge (in vertex order) and the property it
/// yields when it cannot.
pub fn large_type_gate(g: &PresentationGraph) -> GateVerdict {
    if g.is_discrete() {
        return GateVerdict::VacuousDiscrete;
    }
    if let Some([i, j, k]) = g.spherical_triangle() {
        let label = |u, v| g.label_at(u, v).expect("triangle edge");
        return GateVerdict::NotTwoDimensional {
            triangle: [g.name(i).into(), g.name(j).into(), g.name(k).into()],
            labels: [label(i, j), label(j, k), label(i, k)],
        };
    }
    match g.indexed_edges().find(|&(_, _, m)| m == 2) {
        None => GateVerdict::LargeType,
        Some((i, j, _)) => {
            let kind = g.edge_kind_at(i, j);
            GateVerdict::NotLargeType {
                witness: (g.name(i).into(), g.name(j).into()),
                kind,
                property: SeparatingProperty::for_kind(kind),
            }
        }
    }
}
