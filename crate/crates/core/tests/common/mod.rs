//! Test-only oracles shared by the integration suites. The oracles are
//! written from the definitions and use the library only to build graphs.

#![allow(dead_code)]

use std::collections::BTreeSet;

use artin_core::PresentationGraph;
use rand::Rng;

/// Letters `0 = a, 1 = b, 2 = a^-1, 3 = b^-1`.
pub fn inv(x: u8) -> u8 {
    x ^ 2
}

pub fn compact(word: &[u8]) -> String {
    word.iter().map(|&x| ['a', 'b', 'A', 'B'][x as usize]).collect()
}

pub fn free_reduce(word: &[u8]) -> Vec<u8> {
    let mut out: Vec<u8> = Vec::with_capacity(word.len());
    for &x in word {
        if out.last() == Some(&inv(x)) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

/// Every word of length `<= len` over the four letters, shortest first.
pub fn all_words(len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &frontier {
            for x in 0..4u8 {
                let mut v: Vec<u8> = w.clone();
                v.push(x);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Word-problem oracle for `A(m)` by brute force: two freely reduced words of
/// length `<= max_len` are merged when one is obtained from the other by
/// inserting a cyclic conjugate of the relator or its inverse and freely
/// reducing, with the result again of length `<= max_len`. Every merge is a
/// valid equality, so the partition can only be finer than the true one.
pub struct WordOracle {
    max_len: usize,
    offsets: Vec<usize>,
    parent: Vec<u32>,
}

impl WordOracle {
    pub fn new(m: usize, max_len: usize) -> Self {
        let mut offsets = vec![0usize, 1];
        let mut count = 4usize;
        for _ in 1..=max_len {
            let last = *offsets.last().unwrap();
            offsets.push(last + count);
            count *= 3;
        }
        let total = offsets[max_len + 1];
        let mut oracle = WordOracle {
            max_len,
            offsets,
            parent: (0..total as u32).collect(),
        };

        let mut relator: Vec<u8> = (0..m).map(|i| (i % 2) as u8).collect();
        let rhs: Vec<u8> = (0..m).map(|i| ((i + 1) % 2) as u8).collect();
        relator.extend(rhs.iter().rev().map(|&x| inv(x)));
        let inverse: Vec<u8> = relator.iter().rev().map(|&x| inv(x)).collect();
        let mut conjugates = BTreeSet::new();
        for r in [&relator, &inverse] {
            for k in 0..r.len() {
                let mut c = r[k..].to_vec();
                c.extend_from_slice(&r[..k]);
                conjugates.insert(c);
            }
        }
        let conjugates: Vec<Vec<u8>> = conjugates.into_iter().collect();

        let mut stack = vec![Vec::new()];
        let mut buf = Vec::with_capacity(max_len + 2 * m);
        while let Some(w) = stack.pop() {
            let here = oracle.rank(&w);
            for p in 0..=w.len() {
                for c in &conjugates {
                    buf.clear();
                    buf.extend_from_slice(&w[..p]);
                    buf.extend_from_slice(c);
                    buf.extend_from_slice(&w[p..]);
                    let reduced = free_reduce(&buf);
                    if reduced.len() <= max_len {
                        let there = oracle.rank(&reduced);
                        oracle.union(here, there);
                    }
                }
            }
            if w.len() < max_len {
                for x in 0..4u8 {
                    if w.last() != Some(&inv(x)) {
                        let mut v = w.clone();
                        v.push(x);
                        stack.push(v);
                    }
                }
            }
        }
        oracle
    }

    fn rank(&self, w: &[u8]) -> usize {
        if w.is_empty() {
            return 0;
        }
        let mut r = w[0] as usize;
        for i in 1..w.len() {
            let forbidden = inv(w[i - 1]);
            let digit = w[i] - u8::from(w[i] > forbidden);
            r = r * 3 + digit as usize;
        }
        self.offsets[w.len()] + r
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb) as u32;
        }
    }

    /// Class of an arbitrary word whose free reduction has length `<= max_len`.
    pub fn class(&mut self, word: &[u8]) -> usize {
        let w = free_reduce(word);
        assert!(w.len() <= self.max_len);
        let r = self.rank(&w);
        self.find(r)
    }
}

/// Connected simple graphs on `n` vertices up to isomorphism, as sorted edge
/// lists, by brute force over all edge subsets and vertex permutations.
pub fn connected_graphs(n: usize) -> Vec<Vec<(usize, usize)>> {
    simple_graphs(n, true)
}

/// All simple graphs on `n` vertices up to isomorphism.
pub fn all_graphs(n: usize) -> Vec<Vec<(usize, usize)>> {
    simple_graphs(n, false)
}

fn simple_graphs(n: usize, connected: bool) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut index = vec![vec![0usize; n]; n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        index[i][j] = k;
        index[j][i] = k;
    }
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = (0..pairs.len())
            .filter(|&k| mask >> k & 1 == 1)
            .map(|k| pairs[k])
            .collect();
        if connected && !is_connected(n, &edges) {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                edges
                    .iter()
                    .fold(0u32, |acc, &(i, j)| acc | 1 << index[p[i]][p[j]])
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push(edges);
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(i, j) in edges {
            for (x, y) in [(i, j), (j, i)] {
                if x == v && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

pub fn vertex_name(i: usize) -> String {
    format!("v{i}")
}

pub fn build(n: usize, edges: &[(usize, usize, u32)]) -> PresentationGraph {
    PresentationGraph::new(
        (0..n).map(vertex_name),
        edges
            .iter()
            .map(|&(i, j, m)| (vertex_name(i), vertex_name(j), m)),
    )
    .unwrap()
}

pub fn graph(vs: &[&str], es: &[(&str, &str, u32)]) -> PresentationGraph {
    PresentationGraph::new(vs.iter().copied(), es.iter().copied()).unwrap()
}

/// A random large-type graph: a random spanning forest plus extra edges,
/// labels drawn from `3..=8`.
pub fn random_large_type<R: Rng>(rng: &mut R, max_vertices: usize) -> PresentationGraph {
    let n = rng.gen_range(2..=max_vertices);
    let mut edges: Vec<(usize, usize, u32)> = Vec::new();
    let mut present = vec![vec![false; n]; n];
    for v in 1..n {
        if rng.gen_bool(0.9) {
            let u = rng.gen_range(0..v);
            present[u][v] = true;
            edges.push((u, v, rng.gen_range(3..=8)));
        }
    }
    for _ in 0..rng.gen_range(0..=n / 2) {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let (u, v) = (u.min(v), u.max(v));
        if u != v && !present[u][v] {
            present[u][v] = true;
            edges.push((u, v, rng.gen_range(3..=8)));
        }
    }
    build(n, &edges)
}

/// `1/p + 1/q + 1/r > 1`.
pub fn spherical(p: u32, q: u32, r: u32) -> bool {
    // compare over the common denominator p q r
    let (p, q, r) = (p as u64, q as u64, r as u64);
    q * r + p * r + p * q > p * q * r
}

pub fn two_dimensional(n: usize, edges: &[(usize, usize, u32)]) -> bool {
    if edges.is_empty() {
        return false;
    }
    let mut label = vec![vec![0u32; n]; n];
    for &(i, j, m) in edges {
        label[i][j] = m;
        label[j][i] = m;
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (p, q, r) = (label[i][j], label[j][k], label[i][k]);
                if p > 0 && q > 0 && r > 0 && spherical(p, q, r) {
                    return false;
                }
            }
        }
    }
    true
}

/// `|E| + cycle rank` of the component of `x` in the graph obtained by
/// cutting every even edge at its midpoint, with the cycle rank read off a
/// spanning forest.
pub fn cut_rank(n: usize, edges: &[(usize, usize, u32)], x: usize) -> usize {
    let mut cut: Vec<(usize, usize)> = Vec::new();
    let mut vertices = n;
    for &(i, j, m) in edges {
        if m % 2 == 1 {
            cut.push((i, j));
        } else {
            cut.push((i, vertices));
            cut.push((j, vertices + 1));
            vertices += 2;
        }
    }
    // component of x by search
    let mut in_comp = vec![false; vertices];
    in_comp[x] = true;
    let mut stack = vec![x];
    while let Some(v) = stack.pop() {
        for &(a, b) in &cut {
            for (u, w) in [(a, b), (b, a)] {
                if u == v && !in_comp[w] {
                    in_comp[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    let comp_edges: Vec<(usize, usize)> = cut.into_iter().filter(|&(a, _)| in_comp[a]).collect();
    // spanning forest: edges joining new vertices
    let mut reached = vec![false; vertices];
    reached[x] = true;
    let mut forest = 0;
    let mut changed = true;
    while changed {
        changed = false;
        for &(a, b) in &comp_edges {
            if reached[a] != reached[b] {
                reached[a] = true;
                reached[b] = true;
                forest += 1;
                changed = true;
            }
        }
    }
    let cycle_rank = comp_edges.len() - forest;
    comp_edges.len() + cycle_rank
}

/// Label assignments used by the centraliser sweeps: every labelling from
/// `2..=6` when there are at most `full_up_to` edges, otherwise for every
/// parity pattern the labellings (odd 3, even 4), (odd 5, even 6), (odd 5,
/// even 2 wherever no triangle gets a second 2, else 4) and one random
/// labelling with that parity. A light sweep keeps only the first and third.
pub fn label_sweep<R: Rng>(
    n: usize,
    edges: &[(usize, usize)],
    full_up_to: usize,
    light: bool,
    rng: &mut R,
) -> Vec<Vec<(usize, usize, u32)>> {
    let e = edges.len();
    let mut out = Vec::new();
    if e <= full_up_to {
        for code in 0..5usize.pow(e as u32) {
            let mut c = code;
            out.push(
                edges
                    .iter()
                    .map(|&(i, j)| {
                        let m = (c % 5) as u32 + 2;
                        c /= 5;
                        (i, j, m)
                    })
                    .collect(),
            );
        }
        return out;
    }
    let mut adjacent = vec![vec![None; n]; n];
    for (k, &(i, j)) in edges.iter().enumerate() {
        adjacent[i][j] = Some(k);
        adjacent[j][i] = Some(k);
    }
    for pattern in 0u32..(1 << e) {
        let odd = |k: usize| pattern >> k & 1 == 1;
        let with = |o: u32, ev: u32| -> Vec<(usize, usize, u32)> {
            edges
                .iter()
                .enumerate()
                .map(|(k, &(i, j))| (i, j, if odd(k) { o } else { ev }))
                .collect()
        };
        out.push(with(3, 4));
        if !light {
            out.push(with(5, 6));
        }
        let mut twos = with(5, 4);
        for k in 0..e {
            if odd(k) {
                continue;
            }
            let (i, j) = edges[k];
            let clash = (0..n).any(|z| {
                let (a, b) = (adjacent[i][z], adjacent[j][z]);
                [a, b].into_iter().flatten().any(|t| twos[t].2 == 2)
                    && a.is_some()
                    && b.is_some()
            });
            if !clash {
                twos[k].2 = 2;
            }
        }
        out.push(twos);
        if light {
            continue;
        }
        out.push(
            edges
                .iter()
                .enumerate()
                .map(|(k, &(i, j))| {
                    let m = if odd(k) {
                        [3, 5][rng.gen_range(0..2)]
                    } else {
                        [2, 4, 6][rng.gen_range(0..3)]
                    };
                    (i, j, m)
                })
                .collect(),
        );
    }
    out
}
