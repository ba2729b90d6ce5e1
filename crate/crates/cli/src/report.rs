use std::collections::BTreeMap;
use std::fmt::Write as _;

use artin_core::centraliser::{explain_generator_centraliser, Centraliser};
use artin_core::graph::{GraphJson, LabelMultiset};
use artin_core::isomorphism::{large_type_gate, rigidity_report, GateVerdict, RigidityReport};
use artin_core::{EdgeKind, PresentationGraph};
use serde::Serialize;

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisReport {
    pub graph: GraphJson,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub discrete: bool,
    pub large_type: bool,
    pub extra_large: bool,
    pub two_dimensional: bool,
    pub label_multiset: LabelMultiset,
    pub edge_kinds: Vec<EdgeReport>,
    pub abelianisation_rank: usize,
    pub centralisers: BTreeMap<String, CentraliserEntry>,
    pub rigidity: RigidityReport,
    pub gate: GateVerdict,
}

#[derive(Debug, Serialize)]
pub struct EdgeReport {
    pub u: String,
    pub v: String,
    pub m: u32,
    pub kind: EdgeKind,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum CentraliserEntry {
    Shape(Centraliser),
    Undefined { error: String },
}

pub fn analyze(g: &PresentationGraph) -> AnalysisReport {
    let edge_kinds = g
        .edges()
        .map(|(u, v, m)| EdgeReport {
            u: u.to_string(),
            v: v.to_string(),
            m,
            kind: g.edge_kind(u, v).expect("edge of g"),
        })
        .collect();
    let centralisers = g
        .vertices()
        .iter()
        .map(|x| {
            let entry = match explain_generator_centraliser(g, x) {
                Ok(c) => CentraliserEntry::Shape(c),
                Err(e) => CentraliserEntry::Undefined {
                    error: e.to_string(),
                },
            };
            (x.clone(), entry)
        })
        .collect();
    let labels = g.label_multiset();
    AnalysisReport {
        graph: GraphJson::from(g),
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        discrete: g.is_discrete(),
        large_type: g.is_large_type(),
        extra_large: labels.is_extra_large(),
        two_dimensional: g.is_two_dimensional(),
        label_multiset: labels,
        edge_kinds,
        abelianisation_rank: g.abelianisation_rank(),
        centralisers,
        rigidity: rigidity_report(g),
        gate: large_type_gate(g),
    }
}

pub fn gate_text(v: &GateVerdict) -> String {
    match v {
        GateVerdict::LargeType => "large-type".to_string(),
        GateVerdict::VacuousDiscrete => "discrete (no edges)".to_string(),
        GateVerdict::NotTwoDimensional { triangle, labels } => format!(
            "not-2d: spherical triangle {} with labels {:?}",
            triangle.join(" "),
            labels
        ),
        GateVerdict::NotLargeType {
            witness,
            kind,
            property,
        } => format!(
            "not-large-type: {kind} edge {}-{} labelled 2 has property {property:?}",
            witness.0, witness.1
        ),
    }
}

pub fn rigidity_text(r: &RigidityReport) -> String {
    let mut out = format!(
        "rigid: {}\ntwist class size: {}\n",
        r.rigid, r.twist_class_size
    );
    for (a, b) in &r.separating_odd_edges {
        let _ = writeln!(out, "separating odd edge: {a}-{b}");
    }
    for line in r.note.iter().chain(&r.warning) {
        let _ = writeln!(out, "note: {line}");
    }
    out
}

impl AnalysisReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "vertices: {}  edges: {}",
            self.vertex_count, self.edge_count
        );
        let _ = writeln!(
            out,
            "large type: {}  extra-large: {}  two-dimensional: {}  discrete: {}",
            self.large_type, self.extra_large, self.two_dimensional, self.discrete
        );
        let _ = writeln!(out, "labels: {:?}", self.label_multiset.as_slice());
        let _ = writeln!(out, "abelianisation rank: {}", self.abelianisation_rank);
        for e in &self.edge_kinds {
            let _ = writeln!(out, "edge {}-{} ({}): {}", e.u, e.v, e.m, e.kind);
        }
        for (x, c) in &self.centralisers {
            match c {
                CentraliserEntry::Shape(c) => {
                    let _ = writeln!(out, "C({x}) = {} [{}]", c.shape, c.justification);
                }
                CentraliserEntry::Undefined { error } => {
                    let _ = writeln!(out, "C({x}): {error}");
                }
            }
        }
        out.push_str(&rigidity_text(&self.rigidity));
        let _ = writeln!(out, "gate: {}", gate_text(&self.gate));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use artin_core::parse_graph;

    #[test]
    fn report_fields_agree() {
        for text in [
            "gen a\ngen b\ngen c\nrel a b 3\nrel b c 3\nrel a c 3",
            "gen a\ngen b\ngen c\nrel a b 2\nrel b c 3\nrel a c 3",
            "gen x\ngen y\ngen z\nrel x y 2\nrel x z 3",
            "gen a",
        ] {
            let g = parse_graph(text).unwrap();
            let r = analyze(&g);
            assert_eq!(
                matches!(r.gate, GateVerdict::LargeType),
                r.large_type && r.two_dimensional
            );
            assert_eq!(r.centralisers.len(), g.vertex_count());
            assert_eq!(r.edge_kinds.len(), r.edge_count);
        }
    }

    #[test]
    fn undefined_centralisers_carry_the_error() {
        let g = parse_graph("gen a\ngen b\ngen c\nrel a b 2\nrel b c 3\nrel a c 3").unwrap();
        let r = analyze(&g);
        assert!(matches!(r.centralisers["a"], CentraliserEntry::Undefined { .. }));
        assert!(r.text().contains("C(a): "));
    }
}
