use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use super::canonical::{canonical_form, graphs_isomorphic, is_isomorphism, CanonicalGraph};
use super::IsomorphismError;
use crate::graph::PresentationGraph;

/// Swap the endpoints of the odd edge `edge` on the vertices of `side`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TwistMove {
    pub edge: (String, String),
    /// Sorted; contains both endpoints of `edge`.
    pub side: Vec<String>,
}

impl fmt::Display for TwistMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "twist {}{} on {{{}}}", self.edge.0, self.edge.1, self.side.join(", "))
    }
}

/// One move per separating odd edge and per non-empty proper union of the
/// components attached to it, in edge order then subset order.
pub fn twist_moves(g: &PresentationGraph) -> Vec<TwistMove> {
    let mut moves = Vec::new();
    for (a, b, m) in g.indexed_edges() {
        if m % 2 == 0 {
            continue;
        }
        let comps = g.attached_components(a, b);
        let k = comps.len();
        if k < 2 {
            continue;
        }
        for mask in 1..(1u64 << k) - 1 {
            let mut side: Vec<String> = vec![g.name(a).to_string(), g.name(b).to_string()];
            for (c, comp) in comps.iter().enumerate() {
                if mask >> c & 1 == 1 {
                    side.extend(comp.iter().map(|&v| g.name(v).to_string()));
                }
            }
            side.sort();
            moves.push(TwistMove {
                edge: (g.name(a).to_string(), g.name(b).to_string()),
                side,
            });
        }
    }
    moves
}

/// Exchanges `a` and `b` on every edge from `{a, b}` into `side`.
///
/// Besides the moves of [`twist_moves`], the degenerate sides `{a, b}` (no
/// change) and the whole attached part (a global swap) are accepted.
pub fn apply_twist(
    g: &PresentationGraph,
    t: &TwistMove,
) -> Result<PresentationGraph, IsomorphismError> {
    let invalid = |why: &str| IsomorphismError::InvalidTwist(t.to_string(), why.to_string());
    let a = g
        .index_of(&t.edge.0)
        .ok_or_else(|| invalid("unknown edge endpoint"))?;
    let b = g
        .index_of(&t.edge.1)
        .ok_or_else(|| invalid("unknown edge endpoint"))?;
    match g.label_at(a, b) {
        None => return Err(invalid("not an edge")),
        Some(m) if m % 2 == 0 => return Err(invalid("edge label is even")),
        _ => {}
    }
    let mut side = vec![false; g.vertex_count()];
    for name in &t.side {
        let v = g.index_of(name).ok_or_else(|| invalid("unknown side vertex"))?;
        side[v] = true;
    }
    if !side[a] || !side[b] {
        return Err(invalid("side must contain the edge"));
    }
    for comp in g.attached_components(a, b) {
        let inside = comp.iter().filter(|&&v| side[v]).count();
        if inside != 0 && inside != comp.len() {
            return Err(invalid("side splits an attached component"));
        }
    }
    if (0..g.vertex_count()).any(|v| side[v] && v != a && v != b && !touches(g, a, b, v)) {
        return Err(invalid("side contains a vertex away from the edge"));
    }

    let swap = |v: usize| {
        if v == a {
            b
        } else if v == b {
            a
        } else {
            v
        }
    };
    let mut edges = BTreeMap::new();
    for (&(i, j), &m) in g.edge_map() {
        let crosses = (i == a || i == b || j == a || j == b) && !(swap(i) == j);
        let (i, j) = if crosses {
            let other = if i == a || i == b { j } else { i };
            if side[other] {
                (swap(i), swap(j))
            } else {
                (i, j)
            }
        } else {
            (i, j)
        };
        edges.insert((i.min(j), i.max(j)), m);
    }
    Ok(g.with_indexed_edges(edges))
}

fn touches(g: &PresentationGraph, a: usize, b: usize, v: usize) -> bool {
    g.attached_components(a, b).iter().any(|c| c.contains(&v))
}

/// Canonical forms of every graph reachable from `g` by twists.
pub fn twist_class(g: &PresentationGraph) -> BTreeSet<CanonicalGraph> {
    explore(g, None).0.into_keys().collect()
}

type Parents = BTreeMap<CanonicalGraph, Option<(CanonicalGraph, TwistMove)>>;

/// BFS over twist classes. Stops early when `goal` is reached and returns the
/// graph found for it.
fn explore(
    g: &PresentationGraph,
    goal: Option<&CanonicalGraph>,
) -> (Parents, Option<PresentationGraph>) {
    let start = canonical_form(g);
    let mut parents: Parents = BTreeMap::new();
    parents.insert(start.clone(), None);
    if goal == Some(&start) {
        return (parents, Some(g.clone()));
    }
    let mut queue = VecDeque::from([(start, g.clone())]);
    while let Some((key, graph)) = queue.pop_front() {
        for t in twist_moves(&graph) {
            let next = apply_twist(&graph, &t).expect("generated moves are valid");
            let k = canonical_form(&next);
            if parents.contains_key(&k) {
                continue;
            }
            parents.insert(k.clone(), Some((key.clone(), t)));
            if goal == Some(&k) {
                return (parents, Some(next));
            }
            queue.push_back((k, next));
        }
    }
    (parents, None)
}

/// Diagnostics for rigidity: the edge criterion and the orbit size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RigidityReport {
    pub rigid: bool,
    pub separating_odd_edges: Vec<(String, String)>,
    pub twist_class_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

/// No separating odd-labelled edge.
pub fn is_rigid(g: &PresentationGraph) -> bool {
    g.separating_odd_edges().is_empty()
}

pub fn rigidity_report(g: &PresentationGraph) -> RigidityReport {
    let separating_odd_edges = g.separating_odd_edges();
    let rigid = separating_odd_edges.is_empty();
    let twist_class_size = twist_class(g).len();
    let note = (!rigid && twist_class_size == 1).then(|| {
        "separating odd edges exist but every twist gives an isomorphic graph".to_string()
    });
    let warning = (!g.is_large_type())
        .then(|| "the rigidity criterion is established for large-type graphs only".to_string());
    RigidityReport {
        rigid,
        separating_odd_edges,
        twist_class_size,
        note,
        warning,
    }
}

/// Twists taking `g` to a graph that `bijection` maps exactly onto the target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub moves: Vec<TwistMove>,
    pub bijection: BTreeMap<String, String>,
}

impl Certificate {
    pub fn replay(&self, g: &PresentationGraph, target: &PresentationGraph) -> bool {
        let mut current = g.clone();
        for t in &self.moves {
            match apply_twist(&current, t) {
                Ok(next) => current = next,
                Err(_) => return false,
            }
        }
        is_isomorphism(&current, target, &self.bijection)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsomorphismDecision {
    pub isomorphic: bool,
    pub certificate: Option<Certificate>,
}

/// For large-type graphs, the Artin groups are isomorphic exactly when the
/// graphs are twist-equivalent up to graph isomorphism.
pub fn large_type_isomorphic(
    g: &PresentationGraph,
    h: &PresentationGraph,
) -> Result<IsomorphismDecision, IsomorphismError> {
    for (which, graph) in [("first", g), ("second", h)] {
        if !graph.is_large_type() {
            return Err(IsomorphismError::NotLargeType(which));
        }
    }
    let negative = IsomorphismDecision {
        isomorphic: false,
        certificate: None,
    };
    if g.vertex_count() != h.vertex_count()
        || g.edge_count() != h.edge_count()
        || g.label_multiset() != h.label_multiset()
    {
        return Ok(negative);
    }
    let goal = canonical_form(h);
    let (parents, found) = explore(g, Some(&goal));
    let Some(last) = found else {
        return Ok(negative);
    };
    let mut moves = Vec::new();
    let mut key = goal;
    while let Some(Some((prev, t))) = parents.get(&key) {
        moves.push(t.clone());
        key = prev.clone();
    }
    moves.reverse();
    let bijection = graphs_isomorphic(&last, h).expect("canonical forms agree");
    let certificate = Certificate { moves, bijection };
    debug_assert!(certificate.replay(g, h));
    Ok(IsomorphismDecision {
        isomorphic: true,
        certificate: Some(certificate),
    })
}
