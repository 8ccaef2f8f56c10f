//! Threshold graphs: recognition by degree peeling, the normalized
//! representation the packing constructions need, creation sequences and
//! the set `X` of independent vertices complete to the upper half of the
//! clique.

use crate::classes::XSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A threshold representation `(K, S)`.
///
/// `clique` is `c_1..c_k` with `N[c_{i+1}] ⊆ N[c_i]`; `independent` is
/// `u_1..u_s` with `N(u_i) ⊆ N(u_{i+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdRepr {
    graph: Graph,
    clique: Vec<usize>,
    independent: Vec<usize>,
}

impl ThresholdRepr {
    /// Validates and wraps a representation.
    pub fn new(graph: Graph, clique: Vec<usize>, independent: Vec<usize>) -> Result<Self> {
        let n = graph.n();
        let mut seen = vec![false; n];
        for &v in clique.iter().chain(&independent) {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::input(format!("vertex {v} listed twice")));
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::input(
                "clique and independent orders do not cover the graph",
            ));
        }
        for (i, &a) in clique.iter().enumerate() {
            if let Some(&b) = clique[i + 1..].iter().find(|&&b| !graph.has_edge(a, b)) {
                return Err(Error::input(format!(
                    "clique vertices {a} and {b} are not adjacent"
                )));
            }
        }
        for (i, &a) in independent.iter().enumerate() {
            if let Some(&b) = independent[i + 1..].iter().find(|&&b| graph.has_edge(a, b)) {
                return Err(Error::input(format!(
                    "independent vertices {a} and {b} are adjacent"
                )));
            }
        }
        // Nesting: N[c_{i+1}] ⊆ N[c_i] reduces to S-neighbourhoods shrinking,
        // N(u_i) ⊆ N(u_{i+1}) to K-neighbourhoods growing.
        for w in clique.windows(2) {
            if let Some(&u) = independent
                .iter()
                .find(|&&u| graph.has_edge(w[1], u) && !graph.has_edge(w[0], u))
            {
                return Err(Error::input(format!(
                    "N[{}] is not contained in N[{}] (vertex {u})",
                    w[1], w[0]
                )));
            }
        }
        for w in independent.windows(2) {
            if let Some(&c) = clique
                .iter()
                .find(|&&c| graph.has_edge(w[0], c) && !graph.has_edge(w[1], c))
            {
                return Err(Error::input(format!(
                    "N({}) is not contained in N({}) (vertex {c})",
                    w[0], w[1]
                )));
            }
        }
        Ok(ThresholdRepr {
            graph,
            clique,
            independent,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn clique(&self) -> &[usize] {
        &self.clique
    }

    pub fn independent(&self) -> &[usize] {
        &self.independent
    }

    pub fn k(&self) -> usize {
        self.clique.len()
    }

    pub fn s(&self) -> usize {
        self.independent.len()
    }

    /// True when `c_k` exists and has no neighbour in `S` (or the graph is
    /// empty).
    pub fn is_normalized(&self) -> bool {
        match self.clique.last() {
            Some(&ck) => self
                .independent
                .iter()
                .all(|&u| !self.graph.has_edge(ck, u)),
            None => self.independent.is_empty(),
        }
    }
}

/// Recognizes a threshold graph by repeatedly peeling every dominating or
/// every isolated vertex of the remaining graph.
///
/// Dominating vertices join `K` in peel order and isolated vertices join `S`
/// in peel order; ties go by ascending index. When a single vertex remains it
/// joins the side peeled last (or `K` if nothing was peeled).
pub fn recognize_threshold(g: &Graph) -> Result<ThresholdRepr> {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut remaining = n;
    let mut clique = Vec::new();
    let mut independent = Vec::new();
    let mut last_dominating = true;

    while remaining > 0 {
        if remaining == 1 {
            let v = (0..n).find(|&v| alive[v]).expect("one vertex left");
            if last_dominating {
                clique.push(v);
            } else {
                independent.push(v);
            }
            break;
        }
        let dominating: Vec<usize> = (0..n)
            .filter(|&v| alive[v] && deg[v] == remaining - 1)
            .collect();
        let peeled = if !dominating.is_empty() {
            last_dominating = true;
            clique.extend(&dominating);
            dominating
        } else {
            let isolated: Vec<usize> = (0..n).filter(|&v| alive[v] && deg[v] == 0).collect();
            if isolated.is_empty() {
                let witness = (0..n).find(|&v| alive[v]);
                return Err(Error::NotInClass {
                    class: "threshold",
                    witness,
                    reason: format!(
                        "vertex {} is neither isolated nor dominating among the {remaining} remaining vertices",
                        witness.expect("some vertex alive")
                    ),
                });
            }
            last_dominating = false;
            independent.extend(&isolated);
            isolated
        };
        for &v in &peeled {
            alive[v] = false;
            remaining -= 1;
        }
        for &v in &peeled {
            for w in g.neighbors(v) {
                if alive[w] {
                    deg[w] -= 1;
                }
            }
        }
    }
    ThresholdRepr::new(g.clone(), clique, independent)
        .map_err(|e| Error::Invariant(format!("peeling produced an invalid representation: {e}")))
}

/// Moves the last independent vertex into the clique when every clique
/// vertex has a neighbour in `S`, so that `c_k` ends up with none.
pub fn normalize_threshold(r: &ThresholdRepr) -> ThresholdRepr {
    if r.is_normalized() {
        return r.clone();
    }
    // Every clique vertex sees S, so u_s (largest neighbourhood) is complete
    // to K and becomes the new c_{k+1}.
    let mut clique = r.clique.clone();
    let mut independent = r.independent.clone();
    let w = independent.pop().expect("unnormalized implies S nonempty");
    debug_assert!(clique.iter().all(|&c| r.graph.has_edge(c, w)));
    clique.push(w);
    ThresholdRepr::new(r.graph.clone(), clique, independent).expect("normalization keeps validity")
}

/// Builds the threshold graph of a creation sequence: vertex `i + 1` is
/// added dominating for bit `1`, isolated for bit `0`. The empty sequence is
/// a single vertex.
pub fn threshold_from_creation_sequence(bits: &str) -> Result<(Graph, ThresholdRepr)> {
    let n = bits.len() + 1;
    let mut g = Graph::empty(n)?;
    for (i, ch) in bits.chars().enumerate() {
        match ch {
            '1' => {
                for v in 0..=i {
                    g.add_edge(v, i + 1);
                }
            }
            '0' => {}
            other => {
                return Err(Error::input(format!(
                    "creation sequence contains {other:?}; only '0' and '1' are allowed"
                )))
            }
        }
    }
    let r = recognize_threshold(&g)?;
    Ok((g, r))
}

/// All `2^(n-1)` creation sequences of length `n - 1`, in lexicographic order.
pub fn creation_sequences(n: usize) -> impl Iterator<Item = String> {
    let len = n.saturating_sub(1);
    let count: u64 = if n == 0 { 0 } else { 1u64 << len };
    (0..count).map(move |mask| {
        (0..len)
            .map(|j| {
                if (mask >> (len - 1 - j)) & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    })
}

/// Every threshold graph on `n` vertices, one per creation sequence
/// (isomorphic duplicates included).
pub fn enumerate_threshold(n: usize) -> impl Iterator<Item = (Graph, ThresholdRepr)> {
    creation_sequences(n).map(|s| threshold_from_creation_sequence(&s).expect("valid sequence"))
}

/// `X = {u_r, …, u_s}` with `r` minimal such that `u_r` is complete to
/// `c_1..c_⌈k/2⌉`; empty when no such `r` exists.
pub fn compute_threshold_x(r: &ThresholdRepr) -> XSet {
    let half = r.k().div_ceil(2);
    let upper = &r.clique[..half];
    let g = &r.graph;
    let start = r
        .independent
        .iter()
        .position(|&u| upper.iter().all(|&c| g.has_edge(u, c)));
    match start {
        Some(i) => XSet::new(r.independent[i..].to_vec(), Some(i)),
        None => XSet::new(Vec::new(), None),
    }
}
