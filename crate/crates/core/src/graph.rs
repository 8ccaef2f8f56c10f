//! Undirected simple graphs stored as adjacency bitrows, plus the small
//! value types (edges, triangles, edge sets) the rest of the crate trades in.
//!
//! Vertices are dense indices `0..n`. Every edge and triangle is kept in
//! canonical (ascending) vertex order so that equality and ordering are
//! structural.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count accepted by the default constructors.
pub const DEFAULT_MAX_VERTICES: usize = 4096;

const WORD: usize = 64;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// Iterates the indices of set bits in `words`, in ascending order.
pub(crate) fn iter_ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + t)
            }
        })
    })
}

/// An undirected edge `{u, v}` with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[usize; 2]", into = "[usize; 2]")]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(Error::SelfLoop(a)),
        }
    }

    /// Builds an edge from two endpoints already known to be distinct.
    pub(crate) fn of(a: usize, b: usize) -> Self {
        debug_assert_ne!(a, b);
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint opposite `x`, if `x` is an endpoint.
    pub fn other(&self, x: usize) -> Option<usize> {
        if x == self.u {
            Some(self.v)
        } else if x == self.v {
            Some(self.u)
        } else {
            None
        }
    }

    pub fn map(&self, f: impl Fn(usize) -> usize) -> Edge {
        Edge::of(f(self.u), f(self.v))
    }
}

impl TryFrom<[usize; 2]> for Edge {
    type Error = Error;
    fn try_from(p: [usize; 2]) -> Result<Self> {
        Edge::new(p[0], p[1])
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.u, self.v)
    }
}

/// A triangle `{a, b, c}` with `a < b < c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[usize; 3]", into = "[usize; 3]")]
pub struct Triangle {
    a: usize,
    b: usize,
    c: usize,
}

impl Triangle {
    pub fn new(x: usize, y: usize, z: usize) -> Result<Self> {
        let mut v = [x, y, z];
        v.sort_unstable();
        if v[0] == v[1] || v[1] == v[2] {
            return Err(Error::input(format!(
                "triangle ({x}, {y}, {z}) repeats a vertex"
            )));
        }
        Ok(Triangle {
            a: v[0],
            b: v[1],
            c: v[2],
        })
    }

    pub(crate) fn of(x: usize, y: usize, z: usize) -> Self {
        Triangle::new(x, y, z).expect("distinct triangle vertices")
    }

    pub fn vertices(&self) -> [usize; 3] {
        [self.a, self.b, self.c]
    }

    /// The three edges in lexicographic order.
    pub fn edges(&self) -> [Edge; 3] {
        [
            Edge {
                u: self.a,
                v: self.b,
            },
            Edge {
                u: self.a,
                v: self.c,
            },
            Edge {
                u: self.b,
                v: self.c,
            },
        ]
    }

    pub fn contains(&self, x: usize) -> bool {
        self.a == x || self.b == x || self.c == x
    }

    pub fn map(&self, f: impl Fn(usize) -> usize) -> Triangle {
        Triangle::of(f(self.a), f(self.b), f(self.c))
    }
}

impl TryFrom<[usize; 3]> for Triangle {
    type Error = Error;
    fn try_from(t: [usize; 3]) -> Result<Self> {
        Triangle::new(t[0], t[1], t[2])
    }
}

impl From<Triangle> for [usize; 3] {
    fn from(t: Triangle) -> Self {
        [t.a, t.b, t.c]
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.a, self.b, self.c)
    }
}

/// An ordered set of canonical edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet(BTreeSet<Edge>);

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet(BTreeSet::new())
    }

    pub fn insert(&mut self, e: Edge) -> bool {
        self.0.insert(e)
    }

    pub fn remove(&mut self, e: &Edge) -> bool {
        self.0.remove(e)
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.0.contains(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.0.iter()
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.union(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn to_vec(&self) -> Vec<Edge> {
        self.0.iter().copied().collect()
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        EdgeSet(iter.into_iter().collect())
    }
}

impl Extend<Edge> for EdgeSet {
    fn extend<I: IntoIterator<Item = Edge>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl IntoIterator for EdgeSet {
    type Item = Edge;
    type IntoIter = std::collections::btree_set::IntoIter<Edge>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = &'a Edge;
    type IntoIter = std::collections::btree_set::Iter<'a, Edge>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Undirected simple graph on vertices `0..n`.
///
/// Adjacency is one bitrow per vertex, so neighbourhood intersections (and
/// therefore triangle listing) run a machine word at a time.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::empty_with_cap(n, DEFAULT_MAX_VERTICES)
    }

    pub fn empty_with_cap(n: usize, cap: usize) -> Result<Self> {
        if n > cap {
            return Err(Error::TooManyVertices { n, cap });
        }
        let words = words_for(n);
        Ok(Graph {
            n,
            words,
            rows: vec![0; n * words],
            m: 0,
        })
    }

    /// Builds a graph from an edge list. Duplicate pairs, in either
    /// orientation, collapse to a single edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_edges_with_cap(n, edges, DEFAULT_MAX_VERTICES)
    }

    pub fn from_edges_with_cap(n: usize, edges: &[(usize, usize)], cap: usize) -> Result<Self> {
        let mut g = Self::empty_with_cap(n, cap)?;
        for &(a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for a in 0..n {
            for b in a + 1..n {
                g.add_edge(a, b);
            }
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, a: usize, b: usize) {
        if !self.has_edge(a, b) {
            self.rows[a * self.words + b / WORD] |= 1 << (b % WORD);
            self.rows[b * self.words + a / WORD] |= 1 << (a % WORD);
            self.m += 1;
        }
    }

    fn clear_edge(&mut self, a: usize, b: usize) {
        if self.has_edge(a, b) {
            self.rows[a * self.words + b / WORD] &= !(1 << (b % WORD));
            self.rows[b * self.words + a / WORD] &= !(1 << (a % WORD));
            self.m -= 1;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && (self.rows[a * self.words + b / WORD] >> (b % WORD)) & 1 == 1
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    /// Adjacency bitrow of `v`.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_ones(self.row(v))
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| Edge { u, v }));
        }
        out
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges().into_iter().collect()
    }

    /// Every triangle exactly once, in lexicographic order of `(a, b, c)`.
    pub fn triangles(&self) -> Vec<Triangle> {
        let mut out = Vec::new();
        let mut common = vec![0u64; self.words];
        for a in 0..self.n {
            for b in self.neighbors(a).filter(|&b| b > a) {
                for (w, (x, y)) in common.iter_mut().zip(self.row(a).iter().zip(self.row(b))) {
                    *w = x & y;
                }
                out.extend(
                    iter_ones(&common)
                        .filter(|&c| c > b)
                        .map(|c| Triangle { a, b, c }),
                );
            }
        }
        out
    }

    pub fn is_triangle_free(&self) -> bool {
        for a in 0..self.n {
            for b in self.neighbors(a).filter(|&b| b > a) {
                if self.row(a).iter().zip(self.row(b)).any(|(x, y)| x & y != 0) {
                    return false;
                }
            }
        }
        true
    }

    /// The graph with the edges of `h` deleted. Every edge of `h` must be
    /// present.
    pub fn remove_edges(&self, h: &EdgeSet) -> Result<Graph> {
        let mut g = self.clone();
        for e in h {
            if !self.contains_edge(e) {
                return Err(Error::MissingEdge(e.u, e.v));
            }
            g.clear_edge(e.u, e.v);
        }
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::input("permutation length differs from vertex count"));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::input("relabeling is not a permutation"));
            }
        }
        let mut g = Graph::empty_with_cap(self.n, usize::MAX)?;
        for e in self.edges() {
            g.add_edge(perm[e.u], perm[e.v]);
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty_with_cap(self.n, usize::MAX).expect("no cap");
        for a in 0..self.n {
            for b in a + 1..self.n {
                if !self.has_edge(a, b) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field(
                "edges",
                &self.edges().iter().map(|e| (e.u, e.v)).collect::<Vec<_>>(),
            )
            .finish()
    }
}
