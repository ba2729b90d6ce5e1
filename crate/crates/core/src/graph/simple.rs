use crate::util::UnionFind;

use super::{GraphError, PresentationGraph};

/// Unlabelled finite graph with named vertices. Parallel edges are allowed,
/// which keeps [`SimpleGraph::cycle_rank`] meaningful for any input.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    names: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let edges: Vec<(usize, usize)> = edges.into_iter().collect();
        assert!(
            edges.iter().all(|&(i, j)| i < names.len() && j < names.len()),
            "edge endpoint out of range"
        );
        Self { names, edges }
    }

    pub(crate) fn from_indexed(names: Vec<String>, edges: Vec<(usize, usize)>) -> Self {
        Self { names, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(i, j)| usize::from(i == v) + usize::from(j == v))
            .sum()
    }

    fn union_find(&self) -> UnionFind {
        let mut uf = UnionFind::new(self.vertex_count());
        for &(i, j) in &self.edges {
            uf.union(i, j);
        }
        uf
    }

    pub fn component_count(&self) -> usize {
        self.union_find().count()
    }

    /// `|E| - |V| + #components`.
    pub fn cycle_rank(&self) -> usize {
        self.edge_count() + self.component_count() - self.vertex_count()
    }

    /// The connected component containing `name`, as an induced subgraph.
    pub fn component_of(&self, name: &str) -> Result<SimpleGraph, GraphError> {
        let x = self
            .index_of(name)
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))?;
        let mut uf = self.union_find();
        let root = uf.find(x);
        let mut remap = vec![usize::MAX; self.vertex_count()];
        let mut names = Vec::new();
        for v in 0..self.vertex_count() {
            if uf.find(v) == root {
                remap[v] = names.len();
                names.push(self.names[v].clone());
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(i, _)| remap[i] != usize::MAX)
            .map(|&(i, j)| (remap[i], remap[j]))
            .collect();
        Ok(SimpleGraph { names, edges })
    }
}

/// The graph obtained by severing every even-labelled edge at its midpoint.
///
/// Each even edge `{u, v}` becomes two leaf edges `u -- "uv@u"` and
/// `v -- "uv@v"`; odd edges are kept as they are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CutGraph {
    pub graph: SimpleGraph,
    /// Original edge `(u, v, m)` for each edge of `graph`, by position.
    pub provenance: Vec<(String, String, u32)>,
    /// Whether each vertex of `graph` is a stub.
    pub is_stub: Vec<bool>,
}

pub(crate) fn stub_name(u: &str, v: &str, endpoint: &str) -> String {
    format!("{u}{v}@{endpoint}")
}

impl PresentationGraph {
    pub fn cut_graph(&self) -> CutGraph {
        let mut names: Vec<String> = self.vertices().to_vec();
        let mut is_stub = vec![false; names.len()];
        let mut edges = Vec::new();
        let mut provenance = Vec::new();
        for (i, j, m) in self.indexed_edges() {
            let (u, v) = (self.name(i), self.name(j));
            if m % 2 == 1 {
                edges.push((i, j));
                provenance.push((u.to_string(), v.to_string(), m));
            } else {
                for (end, name) in [(i, u), (j, v)] {
                    let stub = names.len();
                    names.push(stub_name(u, v, name));
                    is_stub.push(true);
                    edges.push((end, stub));
                    provenance.push((u.to_string(), v.to_string(), m));
                }
            }
        }
        CutGraph {
            graph: SimpleGraph::from_indexed(names, edges),
            provenance,
            is_stub,
        }
    }
}
