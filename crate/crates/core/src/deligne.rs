//! Truncated Deligne complexes of dihedral Artin groups.
//!
//! For `A(m)` the complex has a vertex for every left coset `gP` with `P` one
//! of `{1}`, `<a>`, `<b>`, `A(m)`, and a triangle `(g, g<s>, A(m))` for every
//! element `g` and generator `s`. Truncating by the word length of coset
//! representatives gives finite, monotone subcomplexes.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::dihedral::{garside_nf, DihedralWord, GarsideNf, Gen, Letter};
use crate::util::UnionFind;

pub const MAX_LENGTH: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeligneError {
    #[error("truncation length {0} is outside 0..={MAX_LENGTH}")]
    LengthOutOfRange(u32),
    #[error("label must be at least 3, got {0}")]
    LabelTooSmall(u32),
    #[error("exponent must be non-zero")]
    ZeroExponent,
    #[error("unknown export format `{0}` (expected dot or json)")]
    UnknownFormat(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parabolic {
    Trivial,
    A,
    B,
    Whole,
}

impl Parabolic {
    pub fn rank(self) -> u8 {
        match self {
            Parabolic::Trivial => 0,
            Parabolic::A | Parabolic::B => 1,
            Parabolic::Whole => 2,
        }
    }

    fn generator(self) -> Option<Gen> {
        match self {
            Parabolic::A => Some(Gen::A),
            Parabolic::B => Some(Gen::B),
            _ => None,
        }
    }
}

impl fmt::Display for Parabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parabolic::Trivial => "1",
            Parabolic::A => "<a>",
            Parabolic::B => "<b>",
            Parabolic::Whole => "A",
        })
    }
}

/// Whether `h` lies in `<s>`.
fn in_cyclic(h: &DihedralWord, s: Gen) -> bool {
    let (sa, sb) = h.exponent_sums();
    let power = DihedralWord::generator_power(h.m(), s, sa + sb).expect("m >= 3");
    garside_nf(&(h * &power.inverse())).is_identity()
}

/// The coset `representative · parabolic`.
#[derive(Debug, Clone)]
pub struct CosetVertex {
    pub parabolic: Parabolic,
    /// A shortest freely reduced word found for the coset.
    pub representative: DihedralWord,
}

impl CosetVertex {
    pub fn rank(&self) -> u8 {
        self.parabolic.rank()
    }

    /// `gP = hP` iff `g^-1 h ∈ P`.
    pub fn same_coset(&self, other: &CosetVertex) -> bool {
        if self.parabolic != other.parabolic {
            return false;
        }
        let h = &self.representative.inverse() * &other.representative;
        match self.parabolic {
            Parabolic::Trivial => garside_nf(&h).is_identity(),
            Parabolic::A => in_cyclic(&h, Gen::A),
            Parabolic::B => in_cyclic(&h, Gen::B),
            Parabolic::Whole => true,
        }
    }

    /// Whether `s^n` fixes this vertex.
    pub fn is_fixed_by(&self, s: Gen, n: i64) -> bool {
        match self.parabolic {
            Parabolic::Trivial => false,
            Parabolic::Whole => true,
            p => {
                let g = &self.representative;
                let sn = DihedralWord::generator_power(g.m(), s, n).expect("m >= 3");
                let h = &(&g.inverse() * &sn) * g;
                in_cyclic(&h, p.generator().expect("rank one"))
            }
        }
    }
}

impl PartialEq for CosetVertex {
    fn eq(&self, other: &Self) -> bool {
        self.same_coset(other)
    }
}

impl Eq for CosetVertex {}

impl fmt::Display for CosetVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parabolic {
            Parabolic::Trivial => write!(f, "{}", self.representative.compact()),
            Parabolic::Whole => f.write_str("A"),
            p if self.representative.is_empty() => write!(f, "{p}"),
            p => write!(f, "{}{p}", self.representative.compact()),
        }
    }
}

/// Corner angles `(rank 0, rank 1, rank 2)` of each triangle.
pub fn triangle_angles(m: u32) -> [f64; 3] {
    let m = f64::from(m);
    [PI / 2.0 - PI / (2.0 * m), PI / 2.0, PI / (2.0 * m)]
}

#[derive(Debug, Clone)]
pub struct DeligneBall {
    m: u32,
    length: u32,
    vertices: Vec<CosetVertex>,
    /// Sorted pairs of vertex indices.
    edges: Vec<(usize, usize)>,
    /// `[rank 0, rank 1, rank 2]` vertex indices.
    triangles: Vec<[usize; 3]>,
}

impl DeligneBall {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn vertices(&self) -> &[CosetVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn angles(&self) -> [f64; 3] {
        triangle_angles(self.m)
    }

    pub fn count_rank(&self, rank: u8) -> usize {
        self.vertices.iter().filter(|v| v.rank() == rank).count()
    }

    /// Index of the unique rank-2 vertex.
    pub fn apex(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn position(&self, v: &CosetVertex) -> Option<usize> {
        self.vertices.iter().position(|w| w.same_coset(v))
    }
}

/// Freely reduced words of length `<= len`, shortest first, letters in the
/// order `a, b, a^-1, b^-1`.
fn reduced_words(m: u32, len: u32) -> Vec<DihedralWord> {
    let mut all = vec![Vec::<Letter>::new()];
    let mut frontier = all.clone();
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &frontier {
            for l in Letter::ALL {
                if w.last() == Some(&l.inv()) {
                    continue;
                }
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all.into_iter()
        .map(|letters| DihedralWord::new(m, letters).expect("m >= 3"))
        .collect()
}

/// All cosets with a representative of word length at most `len`.
pub fn build_ball(m: u32, len: u32) -> Result<DeligneBall, DeligneError> {
    if m < 3 {
        return Err(DeligneError::LabelTooSmall(m));
    }
    if len > MAX_LENGTH {
        return Err(DeligneError::LengthOutOfRange(len));
    }
    let mut index: HashMap<GarsideNf, usize> = HashMap::new();
    let mut elements: Vec<(DihedralWord, GarsideNf)> = Vec::new();
    for w in reduced_words(m, len) {
        let nf = garside_nf(&w);
        if !index.contains_key(&nf) {
            index.insert(nf.clone(), elements.len());
            elements.push((w, nf));
        }
    }

    let mut vertices: Vec<CosetVertex> = elements
        .iter()
        .map(|(w, _)| CosetVertex {
            parabolic: Parabolic::Trivial,
            representative: w.clone(),
        })
        .collect();
    let mut class_vertex: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    for (slot, (parabolic, gen)) in [(Parabolic::A, Gen::A), (Parabolic::B, Gen::B)]
        .into_iter()
        .enumerate()
    {
        // g<s> = h<s> with |g|, |h| <= len forces h = g s^j with |j| <= 2 len
        let mut uf = UnionFind::new(elements.len());
        for (i, (_, nf)) in elements.iter().enumerate() {
            for inverse in [false, true] {
                let mut h = nf.clone();
                for _ in 0..2 * len {
                    h.push(Letter { gen, inverse });
                    if let Some(&k) = index.get(&h) {
                        uf.union(i, k);
                    }
                }
            }
        }
        let mut root_vertex: HashMap<usize, usize> = HashMap::new();
        let mut of_element = vec![0; elements.len()];
        for (i, (w, _)) in elements.iter().enumerate() {
            let root = uf.find(i);
            let v = *root_vertex.entry(root).or_insert_with(|| {
                vertices.push(CosetVertex {
                    parabolic,
                    representative: w.clone(),
                });
                vertices.len() - 1
            });
            of_element[i] = v;
        }
        class_vertex[slot] = of_element;
    }
    vertices.push(CosetVertex {
        parabolic: Parabolic::Whole,
        representative: DihedralWord::identity(m).expect("m >= 3"),
    });
    let apex = vertices.len() - 1;

    let mut triangles = Vec::with_capacity(2 * elements.len());
    for i in 0..elements.len() {
        for classes in &class_vertex {
            triangles.push([i, classes[i], apex]);
        }
    }
    let mut edges: Vec<(usize, usize)> = triangles
        .iter()
        .flat_map(|&[x, y, z]| [(x, y), (x, z), (y, z)])
        .collect();
    edges.sort_unstable();
    edges.dedup();

    Ok(DeligneBall {
        m,
        length: len,
        vertices,
        edges,
        triangles,
    })
}

/// The fixed vertices of `s^n` inside a ball, with the edges between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardTreeSlice {
    pub generator: Gen,
    /// Sorted ball vertex indices.
    pub vertices: Vec<usize>,
    /// Sorted ball edges with both ends fixed.
    pub edges: Vec<(usize, usize)>,
}

impl StandardTreeSlice {
    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 || self.edges.len() + 1 != n {
            return false;
        }
        let local = |v: usize| self.vertices.binary_search(&v).expect("slice vertex");
        let mut uf = UnionFind::new(n);
        for &(x, y) in &self.edges {
            uf.union(local(x), local(y));
        }
        uf.count() == 1
    }
}

pub fn fixed_slice(ball: &DeligneBall, s: Gen, n: i64) -> Result<StandardTreeSlice, DeligneError> {
    if n == 0 {
        return Err(DeligneError::ZeroExponent);
    }
    let fixed: Vec<bool> = ball.vertices.iter().map(|v| v.is_fixed_by(s, n)).collect();
    let vertices = (0..fixed.len()).filter(|&i| fixed[i]).collect();
    let edges = ball
        .edges
        .iter()
        .copied()
        .filter(|&(x, y)| fixed[x] && fixed[y])
        .collect();
    Ok(StandardTreeSlice {
        generator: s,
        vertices,
        edges,
    })
}

/// Vertices fixed by both `a` and `b`.
pub fn slice_intersection(ball: &DeligneBall) -> Vec<usize> {
    let fa = fixed_slice(ball, Gen::A, 1).expect("non-zero exponent");
    let fb = fixed_slice(ball, Gen::B, 1).expect("non-zero exponent");
    fa.vertices
        .into_iter()
        .filter(|v| fb.vertices.binary_search(v).is_ok())
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

impl FromStr for ExportFormat {
    type Err = DeligneError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            other => Err(DeligneError::UnknownFormat(other.to_string())),
        }
    }
}

const RANK_COLOURS: [&str; 3] = ["lightblue", "palegreen", "gold"];

fn export_dot(ball: &DeligneBall, highlight: Option<&StandardTreeSlice>) -> String {
    let mut out = String::from("graph deligne {\n  node [style=filled];\n");
    for (i, v) in ball.vertices.iter().enumerate() {
        out.push_str(&format!(
            "  v{i} [rank={}, rep=\"{}\", label=\"{v}\", fillcolor={}];\n",
            v.rank(),
            v.representative.compact(),
            RANK_COLOURS[v.rank() as usize],
        ));
    }
    for &(x, y) in &ball.edges {
        let lit = highlight.is_some_and(|h| h.edges.binary_search(&(x, y)).is_ok());
        if lit {
            out.push_str(&format!("  v{x} -- v{y} [color=red, penwidth=3];\n"));
        } else {
            out.push_str(&format!("  v{x} -- v{y};\n"));
        }
    }
    out.push_str("}\n");
    out
}

fn export_json(ball: &DeligneBall, highlight: Option<&StandardTreeSlice>) -> serde_json::Value {
    let [a0, a1, a2] = ball.angles();
    let vertices: Vec<_> = ball
        .vertices
        .iter()
        .enumerate()
        .map(|(i, v)| {
            json!({
                "id": i,
                "rank": v.rank(),
                "parabolic": v.parabolic,
                "representative": v.representative.compact(),
                "normalForm": garside_nf(&v.representative).to_string(),
            })
        })
        .collect();
    let highlight = highlight.map(|h| {
        json!({
            "generator": h.generator.to_string(),
            "vertices": h.vertices,
            "edges": h.edges,
        })
    });
    json!({
        "m": ball.m,
        "length": ball.length,
        "angles": { "rank0": a0, "rank1": a1, "rank2": a2 },
        "vertices": vertices,
        "edges": ball.edges,
        "triangles": ball.triangles,
        "highlight": highlight,
    })
}

/// Renders the ball, drawing the edges of `highlight` in red.
pub fn export_complex(
    ball: &DeligneBall,
    format: ExportFormat,
    highlight: Option<&StandardTreeSlice>,
) -> String {
    match format {
        ExportFormat::Dot => export_dot(ball, highlight),
        ExportFormat::Json => {
            let mut text = serde_json::to_string_pretty(&export_json(ball, highlight))
                .expect("JSON values serialise");
            text.push('\n');
            text
        }
    }
}
