use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

use crate::graph::PresentationGraph;
use crate::util::UnionFind;

/// Canonical representative of a labelled graph up to label-preserving
/// isomorphism. Comparison, equality and hashing use the form only.
#[derive(Debug, Clone)]
pub struct CanonicalGraph {
    vertex_count: usize,
    /// `(i, j, m)` with `i < j` over canonical positions, sorted.
    edges: Vec<(usize, usize, u32)>,
    /// `order[i]` is the vertex of the source graph placed at position `i`.
    order: Vec<String>,
}

impl CanonicalGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize, u32)] {
        &self.edges
    }

    pub fn order(&self) -> &[String] {
        &self.order
    }

    /// The canonical form as a graph on vertices `v0, v1, ...`.
    pub fn to_graph(&self) -> PresentationGraph {
        let name = |i: usize| format!("v{i}");
        PresentationGraph::new(
            (0..self.vertex_count).map(name),
            self.edges.iter().map(|&(i, j, m)| (name(i), name(j), m)),
        )
        .expect("canonical form is a valid graph")
    }

    fn key(&self) -> (usize, &[(usize, usize, u32)]) {
        (self.vertex_count, &self.edges)
    }
}

impl PartialEq for CanonicalGraph {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for CanonicalGraph {}

impl PartialOrd for CanonicalGraph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalGraph {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl Hash for CanonicalGraph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

type Partition = Vec<Vec<usize>>;
type Encoding = Vec<(usize, usize, u32)>;

struct Leaf {
    /// `pos[v]` is the canonical position of vertex `v`.
    pos: Vec<usize>,
    path: Vec<usize>,
    encoding: Encoding,
}

struct Search<'a> {
    g: &'a PresentationGraph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

fn cell_index(g: &PresentationGraph, p: &Partition) -> Vec<usize> {
    let mut idx = vec![0; g.vertex_count()];
    for (c, cell) in p.iter().enumerate() {
        for &v in cell {
            idx[v] = c;
        }
    }
    idx
}

/// Splits cells by (own cell, sorted multiset of (neighbour cell, label))
/// until stable. Cells are ordered by signature, so the result is equivariant.
fn refine(g: &PresentationGraph, mut p: Partition) -> Partition {
    loop {
        let idx = cell_index(g, &p);
        let mut next = Vec::with_capacity(p.len());
        for cell in &p {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut groups: BTreeMap<Vec<(usize, u32)>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                let mut sig: Vec<(usize, u32)> =
                    g.neighbours(v).iter().map(|&(u, m)| (idx[u], m)).collect();
                sig.sort_unstable();
                groups.entry(sig).or_default().push(v);
            }
            next.extend(groups.into_values());
        }
        if next.len() == p.len() {
            return next;
        }
        p = next;
    }
}

fn individualise(p: &Partition, cell: usize, v: usize) -> Partition {
    let mut out = Vec::with_capacity(p.len() + 1);
    out.extend_from_slice(&p[..cell]);
    out.push(vec![v]);
    out.push(p[cell].iter().copied().filter(|&u| u != v).collect());
    out.extend_from_slice(&p[cell + 1..]);
    out
}

fn encode(g: &PresentationGraph, pos: &[usize]) -> Encoding {
    let mut e: Encoding = g
        .indexed_edges()
        .map(|(i, j, m)| {
            let (a, b) = (pos[i], pos[j]);
            (a.min(b), a.max(b), m)
        })
        .collect();
    e.sort_unstable();
    e
}

impl Search<'_> {
    /// Returns `Some(level)` to abandon every node deeper than `level`.
    fn visit(&mut self, p: Partition, path: &mut Vec<usize>) -> Option<usize> {
        let p = refine(self.g, p);
        let Some(target) = p.iter().position(|c| c.len() > 1) else {
            return self.leaf(&p, path);
        };
        let level = path.len();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &p[target] {
            if self.equivalent_to_tried(path, v, &tried) {
                continue;
            }
            tried.push(v);
            path.push(v);
            let signal = self.visit(individualise(&p, target, v), path);
            path.pop();
            match signal {
                Some(l) if l < level => return Some(l),
                _ => {}
            }
        }
        None
    }

    fn leaf(&mut self, p: &Partition, path: &[usize]) -> Option<usize> {
        let mut pos = vec![0; self.g.vertex_count()];
        for (i, cell) in p.iter().enumerate() {
            pos[cell[0]] = i;
        }
        let encoding = encode(self.g, &pos);
        let leaf = Leaf {
            pos,
            path: path.to_vec(),
            encoding,
        };
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                pos: leaf.pos.clone(),
                path: leaf.path.clone(),
                encoding: leaf.encoding.clone(),
            });
            self.best = Some(leaf);
            return None;
        };
        let best = self.best.as_ref().expect("set with first");
        for reference in [first, best] {
            if reference.encoding == leaf.encoding {
                let mut at = vec![0; leaf.pos.len()];
                for (v, &i) in reference.pos.iter().enumerate() {
                    at[i] = v;
                }
                let sigma: Vec<usize> = leaf.pos.iter().map(|&i| at[i]).collect();
                let diverge = reference
                    .path
                    .iter()
                    .zip(&leaf.path)
                    .take_while(|(a, b)| a == b)
                    .count();
                self.automorphisms.push(sigma);
                return Some(diverge);
            }
        }
        if leaf.encoding < best.encoding {
            self.best = Some(leaf);
        }
        None
    }

    /// Whether an automorphism fixing `prefix` pointwise maps `v` into `tried`.
    fn equivalent_to_tried(&self, prefix: &[usize], v: usize, tried: &[usize]) -> bool {
        if tried.is_empty() {
            return false;
        }
        let n = self.g.vertex_count();
        let mut uf = UnionFind::new(n);
        for sigma in &self.automorphisms {
            if prefix.iter().all(|&x| sigma[x] == x) {
                for (x, &y) in sigma.iter().enumerate() {
                    uf.union(x, y);
                }
            }
        }
        let root = uf.find(v);
        tried.iter().any(|&t| uf.find(t) == root)
    }
}

/// Canonical form by colour refinement and individualisation, with
/// automorphism pruning.
pub fn canonical_form(g: &PresentationGraph) -> CanonicalGraph {
    let n = g.vertex_count();
    if n == 0 {
        return CanonicalGraph {
            vertex_count: 0,
            edges: Vec::new(),
            order: Vec::new(),
        };
    }
    let mut search = Search {
        g,
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    search.visit(vec![(0..n).collect()], &mut Vec::new());
    let best = search.best.expect("the search reaches at least one leaf");
    let mut order = vec![String::new(); n];
    for (v, &i) in best.pos.iter().enumerate() {
        order[i] = g.name(v).to_string();
    }
    CanonicalGraph {
        vertex_count: n,
        edges: best.encoding,
        order,
    }
}

/// A label-preserving bijection `V(g) -> V(h)`, checked edge by edge.
pub fn graphs_isomorphic(
    g: &PresentationGraph,
    h: &PresentationGraph,
) -> Option<BTreeMap<String, String>> {
    if g.vertex_count() != h.vertex_count()
        || g.edge_count() != h.edge_count()
        || g.label_multiset() != h.label_multiset()
    {
        return None;
    }
    let (cg, ch) = (canonical_form(g), canonical_form(h));
    if cg != ch {
        return None;
    }
    let map: BTreeMap<String, String> = cg
        .order
        .iter()
        .cloned()
        .zip(ch.order.iter().cloned())
        .collect();
    is_isomorphism(g, h, &map).then_some(map)
}

/// Whether `map` is a bijection carrying the labelled edges of `g` exactly
/// onto those of `h`.
pub fn is_isomorphism(
    g: &PresentationGraph,
    h: &PresentationGraph,
    map: &BTreeMap<String, String>,
) -> bool {
    if map.len() != g.vertex_count() || g.vertex_count() != h.vertex_count() {
        return false;
    }
    if !g.vertices().iter().all(|v| map.contains_key(v)) {
        return false;
    }
    match g.relabelled(|v| map[v].clone()) {
        Ok(image) => &image == h,
        Err(_) => false,
    }
}
