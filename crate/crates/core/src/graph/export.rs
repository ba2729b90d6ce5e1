use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{GraphError, PresentationGraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelledEdge {
    pub u: String,
    pub v: String,
    pub m: u32,
}

/// Wire shape `{"vertices":[...],"edges":[{"u":..,"v":..,"m":..}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<LabelledEdge>,
}

impl From<&PresentationGraph> for GraphJson {
    fn from(g: &PresentationGraph) -> Self {
        GraphJson {
            vertices: g.vertices().to_vec(),
            edges: g
                .edges()
                .map(|(u, v, m)| LabelledEdge {
                    u: u.to_string(),
                    v: v.to_string(),
                    m,
                })
                .collect(),
        }
    }
}

impl TryFrom<GraphJson> for PresentationGraph {
    type Error = GraphError;

    fn try_from(json: GraphJson) -> Result<Self, Self::Error> {
        PresentationGraph::new(
            json.vertices,
            json.edges.into_iter().map(|e| (e.u, e.v, e.m)),
        )
    }
}

impl PresentationGraph {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(GraphJson::from(self)).expect("graph json is always serializable")
    }

    /// Compact JSON with keys in the order `vertices`, `edges` and `u`, `v`, `m`.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("graph json is always serializable")
    }

    pub fn from_json_str(text: &str) -> Result<Self, JsonGraphError> {
        let json: GraphJson = serde_json::from_str(text)?;
        Ok(PresentationGraph::try_from(json)?)
    }

    /// Undirected DOT with `label=<m>` on every edge.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph presentation {\n");
        for v in self.vertices() {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v, m) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v} [label={m}];");
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, thiserror::Error)]
pub enum JsonGraphError {
    #[error("malformed graph json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
