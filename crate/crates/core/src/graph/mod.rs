//! Presentation graphs and their purely combinatorial invariants.
//!
//! A [`PresentationGraph`] is a finite simplicial graph whose edges carry
//! integer labels `m >= 2`. A missing edge stands for the label infinity, so
//! that label is never stored.
//!
//! Vertices are kept sorted by name and edges are keyed by sorted index pairs,
//! so every graph has one in-memory representation and derived equality is
//! equality of labelled graphs on the same vertex names.

mod dsl;
mod export;
mod retraction;
mod simple;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::util::UnionFind;

pub use dsl::{parse_graph, serialize_graph, ParseError, ParseErrorKind};
pub use export::{GraphJson, JsonGraphError, LabelledEdge};
pub use retraction::{GraphWord, LeafRetraction};
pub use simple::{CutGraph, SimpleGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid vertex name `{0}`")]
    InvalidName(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("loop edge at `{0}`")]
    LoopEdge(String),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(String, String),
    #[error("edge {{{0}, {1}}} has label {2}, labels must be at least 2")]
    LabelTooSmall(String, String, u32),
    #[error("no edge between `{0}` and `{1}`")]
    UnknownEdge(String, String),
    #[error("`{0}` is not a valence-one vertex")]
    NotALeaf(String),
    #[error("the edge at leaf `{0}` has odd label {1}; the retraction is not a homomorphism")]
    OddLeafEdge(String, u32),
    #[error("unknown generator `{0}` in word")]
    UnknownGenerator(String),
    #[error("malformed word token `{0}`")]
    BadToken(String),
}

/// Returns true when `name` matches `[A-Za-z][A-Za-z0-9_]*`.
pub fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PresentationGraph {
    names: Vec<String>,
    edges: BTreeMap<(usize, usize), u32>,
    adjacency: Vec<Vec<(usize, u32)>>,
}

impl PresentationGraph {
    /// Builds a graph from vertex names and labelled edges, enforcing that the
    /// graph is simple, names are unique and well formed, and labels are `>= 2`.
    pub fn new<V, S, E, T>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (T, T, u32)>,
        T: AsRef<str>,
    {
        let mut names: Vec<String> = Vec::new();
        for v in vertices {
            let v = v.into();
            if !is_valid_name(&v) {
                return Err(GraphError::InvalidName(v));
            }
            names.push(v);
        }
        names.sort();
        for w in names.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateVertex(w[0].clone()));
            }
        }
        let mut map = BTreeMap::new();
        for (u, v, m) in edges {
            let (u, v) = (u.as_ref(), v.as_ref());
            let i = names
                .binary_search_by(|n| n.as_str().cmp(u))
                .map_err(|_| GraphError::UnknownVertex(u.to_string()))?;
            let j = names
                .binary_search_by(|n| n.as_str().cmp(v))
                .map_err(|_| GraphError::UnknownVertex(v.to_string()))?;
            if i == j {
                return Err(GraphError::LoopEdge(u.to_string()));
            }
            if m < 2 {
                return Err(GraphError::LabelTooSmall(u.to_string(), v.to_string(), m));
            }
            let key = (i.min(j), i.max(j));
            if map.insert(key, m).is_some() {
                return Err(GraphError::DuplicateEdge(
                    names[key.0].clone(),
                    names[key.1].clone(),
                ));
            }
        }
        Ok(Self::from_parts(names, map))
    }

    fn from_parts(names: Vec<String>, edges: BTreeMap<(usize, usize), u32>) -> Self {
        let mut adjacency = vec![Vec::new(); names.len()];
        for (&(i, j), &m) in &edges {
            adjacency[i].push((j, m));
            adjacency[j].push((i, m));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Self {
            names,
            edges,
            adjacency,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertex names in sorted order; positions are the vertex indices.
    pub fn vertices(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|n| n.as_str().cmp(name)).ok()
    }

    fn require(&self, name: &str) -> Result<usize, GraphError> {
        self.index_of(name)
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    pub fn contains_vertex(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    /// Label of the edge `{u, v}`, or `None` when the vertices are not adjacent
    /// (label infinity) or unknown.
    pub fn label(&self, u: &str, v: &str) -> Option<u32> {
        let (i, j) = (self.index_of(u)?, self.index_of(v)?);
        self.label_at(i, j)
    }

    pub fn label_at(&self, i: usize, j: usize) -> Option<u32> {
        self.edges.get(&(i.min(j), i.max(j))).copied()
    }

    pub fn neighbours(&self, index: usize) -> &[(usize, u32)] {
        &self.adjacency[index]
    }

    pub fn degree(&self, index: usize) -> usize {
        self.adjacency[index].len()
    }

    /// Number of incident edges. Infinite labels are absent edges and do not count.
    pub fn valence(&self, name: &str) -> Result<usize, GraphError> {
        Ok(self.degree(self.require(name)?))
    }

    /// Edges as `(u, v, m)` with `u < v` in name order, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str, u32)> + '_ {
        self.edges
            .iter()
            .map(|(&(i, j), &m)| (self.names[i].as_str(), self.names[j].as_str(), m))
    }

    pub fn indexed_edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.edges.iter().map(|(&(i, j), &m)| (i, j, m))
    }

    pub fn is_discrete(&self) -> bool {
        self.edges.is_empty()
    }

    /// Every label is at least 3. Vacuously true for discrete graphs; use
    /// [`PresentationGraph::large_type_check`] to see the advisory flag.
    pub fn is_large_type(&self) -> bool {
        self.large_type_check().holds
    }

    pub fn large_type_check(&self) -> LargeTypeCheck {
        LargeTypeCheck {
            holds: self.edges.values().all(|&m| m >= 3),
            vacuous: self.edges.is_empty(),
        }
    }

    /// Non-discrete, and no triangle spans a spherical-type parabolic subgroup.
    ///
    /// A three-generator parabolic with a missing edge contains a free factor
    /// and is never spherical, so only triangles need checking.
    pub fn is_two_dimensional(&self) -> bool {
        !self.is_discrete() && self.spherical_triangle().is_none()
    }

    /// First triangle (in index order) with labels `(p, q, r)` such that
    /// `1/p + 1/q + 1/r > 1`, returned as vertex indices.
    pub fn spherical_triangle(&self) -> Option<[usize; 3]> {
        let n = self.vertex_count();
        for i in 0..n {
            for &(j, p) in &self.adjacency[i] {
                if j <= i {
                    continue;
                }
                for &(k, q) in &self.adjacency[j] {
                    if k <= j {
                        continue;
                    }
                    if let Some(r) = self.label_at(i, k) {
                        if is_spherical_triple(p, q, r) {
                            return Some([i, j, k]);
                        }
                    }
                }
            }
        }
        None
    }

    pub fn label_multiset(&self) -> LabelMultiset {
        let mut labels: Vec<u32> = self.edges.values().copied().collect();
        labels.sort_unstable();
        LabelMultiset(labels)
    }

    pub fn edge_kind(&self, u: &str, v: &str) -> Result<EdgeKind, GraphError> {
        let (i, j) = (self.require(u)?, self.require(v)?);
        if self.label_at(i, j).is_none() {
            return Err(GraphError::UnknownEdge(u.to_string(), v.to_string()));
        }
        Ok(self.edge_kind_at(i, j))
    }

    pub(crate) fn edge_kind_at(&self, i: usize, j: usize) -> EdgeKind {
        match (self.degree(i) == 1, self.degree(j) == 1) {
            (true, true) => EdgeKind::Isolated,
            (false, false) => EdgeKind::Inner,
            _ => EdgeKind::Outer,
        }
    }

    /// The underlying unlabelled graph.
    pub fn underlying(&self) -> SimpleGraph {
        SimpleGraph::from_indexed(
            self.names.clone(),
            self.edges.keys().copied().collect(),
        )
    }

    /// Rank of the (free abelian) abelianisation: each odd edge identifies its
    /// endpoints, even edges impose nothing.
    pub fn abelianisation_rank(&self) -> usize {
        let mut uf = UnionFind::new(self.vertex_count());
        for (i, j, m) in self.indexed_edges() {
            if m % 2 == 1 {
                uf.union(i, j);
            }
        }
        uf.count()
    }

    /// Components of the graph with `a` and `b` deleted that contain a
    /// neighbour of `a` or `b`, each sorted, ordered by smallest vertex.
    pub(crate) fn attached_components(&self, a: usize, b: usize) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut uf = UnionFind::new(n);
        for (i, j, _) in self.indexed_edges() {
            if i != a && i != b && j != a && j != b {
                uf.union(i, j);
            }
        }
        let mut attached = vec![false; n];
        for &(z, _) in self.adjacency[a].iter().chain(&self.adjacency[b]) {
            if z != a && z != b {
                attached[uf.find(z)] = true;
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..n {
            if v == a || v == b {
                continue;
            }
            let root = uf.find(v);
            if attached[root] {
                groups.entry(root).or_default().push(v);
            }
        }
        let mut comps: Vec<Vec<usize>> = groups.into_values().collect();
        comps.sort_by_key(|c| c[0]);
        comps
    }

    /// Odd-labelled edges `{a, b}` along which the graph splits as
    /// `G1 ∪ G2` with `G1 ∩ G2 = {a, b}` and both pieces strictly larger than
    /// the edge. Only components attached to the edge count as pieces.
    pub fn separating_odd_edges(&self) -> Vec<(String, String)> {
        self.indexed_edges()
            .filter(|&(i, j, m)| m % 2 == 1 && self.attached_components(i, j).len() >= 2)
            .map(|(i, j, _)| (self.names[i].clone(), self.names[j].clone()))
            .collect()
    }

    /// The homomorphism onto `<y>` killing every other generator. Defined only
    /// when `y` is a leaf on an even-labelled edge.
    pub fn even_leaf_retraction(&self, y: &str) -> Result<LeafRetraction, GraphError> {
        let i = self.require(y)?;
        if self.degree(i) != 1 {
            return Err(GraphError::NotALeaf(y.to_string()));
        }
        let (_, m) = self.adjacency[i][0];
        if m % 2 == 1 {
            return Err(GraphError::OddLeafEdge(y.to_string(), m));
        }
        Ok(LeafRetraction::new(y.to_string()))
    }

    /// Renames vertices through `f`; fails if the result is not a valid graph.
    pub fn relabelled<F>(&self, mut f: F) -> Result<Self, GraphError>
    where
        F: FnMut(&str) -> String,
    {
        let names: Vec<String> = self.names.iter().map(|n| f(n)).collect();
        let edges: Vec<(String, String, u32)> = self
            .indexed_edges()
            .map(|(i, j, m)| (names[i].clone(), names[j].clone(), m))
            .collect();
        Self::new(names, edges)
    }

    /// Builds a graph on the same vertex names with different edges, given by index.
    pub(crate) fn with_indexed_edges(&self, edges: BTreeMap<(usize, usize), u32>) -> Self {
        Self::from_parts(self.names.clone(), edges)
    }

    pub(crate) fn edge_map(&self) -> &BTreeMap<(usize, usize), u32> {
        &self.edges
    }
}

impl fmt::Display for PresentationGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_graph(self))
    }
}

/// `1/p + 1/q + 1/r > 1`, in integer arithmetic.
pub fn is_spherical_triple(p: u32, q: u32, r: u32) -> bool {
    let (p, q, r) = (u64::from(p), u64::from(q), u64::from(r));
    q * r + p * r + p * q > p * q * r
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LargeTypeCheck {
    pub holds: bool,
    /// Set when the graph has no edges, so the condition holds vacuously.
    pub vacuous: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    /// Both endpoints have valence one.
    Isolated,
    /// Both endpoints have valence at least two.
    Inner,
    /// Exactly one endpoint has valence one.
    Outer,
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeKind::Isolated => "isolated",
            EdgeKind::Inner => "inner",
            EdgeKind::Outer => "outer",
        })
    }
}

/// Sorted multiset of edge labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct LabelMultiset(pub Vec<u32>);

impl LabelMultiset {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Every label is at least 4.
    pub fn is_extra_large(&self) -> bool {
        self.0.iter().all(|&m| m >= 4)
    }
}
