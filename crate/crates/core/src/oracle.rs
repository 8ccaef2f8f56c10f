//! Exact `μ(G)` (maximum triangle packing) and `τ(G)` (minimum triangle
//! hitting) by depth-first branch and bound.
//!
//! Both searches branch in the fixed lexicographic order of edges and
//! triangles, so node counts are reproducible. A search that runs out of
//! node budget returns its best witness with `exact == false`.

use std::fmt;

use serde::Serialize;

use crate::certificate::{HittingSet, TrianglePacking};
use crate::error::{Error, Result};
use crate::graph::{iter_ones, Edge, Graph, Triangle};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Mu,
    Tau,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Packing(TrianglePacking),
    Hitting(HittingSet),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleResult {
    pub objective: Objective,
    pub value: usize,
    pub witness: Witness,
    pub nodes_explored: u64,
    pub exact: bool,
}

impl OracleResult {
    pub fn packing(&self) -> Option<&TrianglePacking> {
        match &self.witness {
            Witness::Packing(p) => Some(p),
            Witness::Hitting(_) => None,
        }
    }

    pub fn hitting(&self) -> Option<&HittingSet> {
        match &self.witness {
            Witness::Hitting(h) => Some(h),
            Witness::Packing(_) => None,
        }
    }
}

/// Edge and triangle index tables shared by both searches.
struct Instance {
    n: usize,
    edges: Vec<Edge>,
    triangles: Vec<Triangle>,
    tri_edges: Vec<[usize; 3]>,
    edge_tris: Vec<Vec<usize>>,
}

impl Instance {
    fn new(g: &Graph) -> Self {
        let edges = g.edges();
        let triangles = g.triangles();
        let id = |e: Edge| {
            edges
                .binary_search(&e)
                .expect("triangle edge is a graph edge")
        };
        let tri_edges: Vec<[usize; 3]> = triangles
            .iter()
            .map(|t| {
                let [a, b, c] = t.edges();
                [id(a), id(b), id(c)]
            })
            .collect();
        let mut edge_tris = vec![Vec::new(); edges.len()];
        for (t, es) in tri_edges.iter().enumerate() {
            for &e in es {
                edge_tris[e].push(t);
            }
        }
        Instance {
            n: g.n(),
            edges,
            triangles,
            tri_edges,
            edge_tris,
        }
    }

    fn edge_id(&self, e: &Edge) -> Option<usize> {
        self.edges.binary_search(e).ok()
    }

    fn triangle_id(&self, t: &Triangle) -> Option<usize> {
        self.triangles.binary_search(t).ok()
    }
}

/// Maximum triangle packing of `g`.
pub fn exact_mu(g: &Graph, budget: u64) -> OracleResult {
    exact_mu_seeded(g, budget, None)
}

/// [`exact_mu`] with an optional known packing as the starting incumbent.
/// A seed that is not a valid packing of `g` is ignored.
pub fn exact_mu_seeded(g: &Graph, budget: u64, seed: Option<&TrianglePacking>) -> OracleResult {
    let inst = Instance::new(g);
    let m = inst.edges.len();

    // Lexicographic greedy as a floor for the incumbent.
    let mut used = vec![false; m];
    let mut best: Vec<usize> = Vec::new();
    for (t, es) in inst.tri_edges.iter().enumerate() {
        if es.iter().all(|&e| !used[e]) {
            es.iter().for_each(|&e| used[e] = true);
            best.push(t);
        }
    }
    if let Some(p) = seed.filter(|p| p.check(g).is_ok()) {
        if p.len() > best.len() {
            best = p
                .triangles()
                .iter()
                .map(|t| inst.triangle_id(t).expect("checked packing"))
                .collect();
        }
    }

    let mut search = MuSearch {
        inst: &inst,
        state: vec![EdgeState::Free; m],
        chosen: Vec::new(),
        best,
        nodes: 0,
        budget,
        aborted: false,
        useful: vec![false; m],
        deg: vec![0; inst.n],
    };
    search.run();

    let mut tris: Vec<Triangle> = search.best.iter().map(|&t| inst.triangles[t]).collect();
    tris.sort();
    OracleResult {
        objective: Objective::Mu,
        value: tris.len(),
        witness: Witness::Packing(TrianglePacking::new(tris)),
        nodes_explored: search.nodes,
        exact: !search.aborted,
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum EdgeState {
    Free,
    Used,
    Dead,
}

struct MuSearch<'a> {
    inst: &'a Instance,
    state: Vec<EdgeState>,
    chosen: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
    aborted: bool,
    useful: Vec<bool>,
    deg: Vec<usize>,
}

impl MuSearch<'_> {
    fn alive(&self, t: usize) -> bool {
        self.inst.tri_edges[t]
            .iter()
            .all(|&e| self.state[e] == EdgeState::Free)
    }

    fn run(&mut self) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }

        // Free edges that still lie in an available triangle.
        self.useful.fill(false);
        for t in 0..self.inst.tri_edges.len() {
            if self.alive(t) {
                for &e in &self.inst.tri_edges[t] {
                    self.useful[e] = true;
                }
            }
        }
        self.deg.fill(0);
        let mut useful_count = 0;
        let mut branch = None;
        for (e, &u) in self.useful.iter().enumerate() {
            if u {
                useful_count += 1;
                let edge = self.inst.edges[e];
                self.deg[edge.u()] += 1;
                self.deg[edge.v()] += 1;
                branch.get_or_insert(e);
            }
        }
        let Some(e) = branch else {
            return;
        };

        // A triangle takes three useful edges and two at each of its corners,
        // so the uncovered useful edges keep the degree parities and a size
        // congruent to the useful edge count mod 3.
        let odd = self.deg.iter().filter(|&&d| d % 2 == 1).count();
        let by_edges = (useful_count - min_leave(useful_count, odd)) / 3;
        let by_degrees = self.deg.iter().map(|d| d / 2).sum::<usize>() / 3;
        if self.chosen.len() + by_edges.min(by_degrees) <= self.best.len() {
            return;
        }

        for i in 0..self.inst.edge_tris[e].len() {
            let t = self.inst.edge_tris[e][i];
            if !self.alive(t) {
                continue;
            }
            for &x in &self.inst.tri_edges[t] {
                self.state[x] = EdgeState::Used;
            }
            self.chosen.push(t);
            self.run();
            self.chosen.pop();
            for &x in &self.inst.tri_edges[t] {
                self.state[x] = EdgeState::Free;
            }
            if self.aborted {
                return;
            }
        }
        self.state[e] = EdgeState::Dead;
        self.run();
        self.state[e] = EdgeState::Free;
    }
}

/// Smallest possible leave of a packing inside `m` edges with `odd`
/// odd-degree vertices: it meets every odd vertex, is congruent to `m` mod 3,
/// and an even graph with edges has at least three.
fn min_leave(m: usize, odd: usize) -> usize {
    let floor = if odd == 0 { 0 } else { odd.div_ceil(2) };
    (floor..=m)
        .find(|&l| l % 3 == m % 3 && !(odd == 0 && (l == 1 || l == 2)))
        .unwrap_or(m)
}

/// Minimum triangle hitting set of `g`.
pub fn exact_tau(g: &Graph, budget: u64) -> OracleResult {
    exact_tau_seeded(g, budget, None)
}

/// [`exact_tau`] warm-started from a known hitting set. A seed that is not a
/// valid hitting set of `g` is ignored.
pub fn exact_tau_seeded(g: &Graph, budget: u64, seed: Option<&HittingSet>) -> OracleResult {
    let inst = Instance::new(g);
    let m = inst.edges.len();
    let mut best = greedy_hitting(&inst);
    if let Some(h) = seed.filter(|h| h.check(g).is_ok()) {
        if h.len() < best.len() {
            best = h
                .edges()
                .iter()
                .map(|e| inst.edge_id(e).expect("checked hitting set"))
                .collect();
        }
    }
    let words = inst.n.div_ceil(64);
    let mut rows = vec![0u64; inst.n * words];
    for e in &inst.edges {
        rows[e.u() * words + e.v() / 64] |= 1 << (e.v() % 64);
        rows[e.v() * words + e.u() / 64] |= 1 << (e.u() % 64);
    }
    let mut search = TauSearch {
        inst: &inst,
        deleted: vec![false; m],
        protected: vec![false; m],
        hits: vec![0; inst.tri_edges.len()],
        chosen: Vec::new(),
        best_cost: best.len(),
        best,
        nodes: 0,
        budget,
        aborted: false,
        words,
        rows,
        scratch_used: vec![false; m],
    };
    search.run();

    let witness: HittingSet = search.best.iter().map(|&e| inst.edges[e]).collect();
    OracleResult {
        objective: Objective::Tau,
        value: witness.len(),
        witness: Witness::Hitting(witness),
        nodes_explored: search.nodes,
        exact: !search.aborted,
    }
}

/// Repeatedly deletes, from the first unhit triangle, the edge lying in the
/// most unhit triangles; then drops deletions that turned out redundant.
fn greedy_hitting(inst: &Instance) -> Vec<usize> {
    let m = inst.edges.len();
    let mut deleted = vec![false; m];
    let hit = |t: usize, deleted: &[bool]| inst.tri_edges[t].iter().any(|&e| deleted[e]);
    for t in 0..inst.tri_edges.len() {
        if hit(t, &deleted) {
            continue;
        }
        let pick = *inst.tri_edges[t]
            .iter()
            .max_by_key(|&&e| {
                let load = inst.edge_tris[e]
                    .iter()
                    .filter(|&&s| !hit(s, &deleted))
                    .count();
                (load, std::cmp::Reverse(e))
            })
            .expect("three edges");
        deleted[pick] = true;
    }
    for e in 0..m {
        if deleted[e] {
            deleted[e] = false;
            if inst.edge_tris[e].iter().any(|&t| !hit(t, &deleted)) {
                deleted[e] = true;
            }
        }
    }
    (0..m).filter(|&e| deleted[e]).collect()
}

struct TauSearch<'a> {
    inst: &'a Instance,
    deleted: Vec<bool>,
    protected: Vec<bool>,
    hits: Vec<u8>,
    chosen: Vec<usize>,
    best_cost: usize,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
    aborted: bool,
    words: usize,
    /// Adjacency of the residual graph (deleted edges cleared).
    rows: Vec<u64>,
    scratch_used: Vec<bool>,
}

impl TauSearch<'_> {
    fn delete(&mut self, e: usize) {
        self.deleted[e] = true;
        for &t in &self.inst.edge_tris[e] {
            self.hits[t] += 1;
        }
        let edge = self.inst.edges[e];
        let (u, v, w) = (edge.u(), edge.v(), self.words);
        self.rows[u * w + v / 64] &= !(1 << (v % 64));
        self.rows[v * w + u / 64] &= !(1 << (u % 64));
        self.chosen.push(e);
    }

    fn undelete(&mut self, e: usize) {
        self.deleted[e] = false;
        for &t in &self.inst.edge_tris[e] {
            self.hits[t] -= 1;
        }
        let edge = self.inst.edges[e];
        let (u, v, w) = (edge.u(), edge.v(), self.words);
        self.rows[u * w + v / 64] |= 1 << (v % 64);
        self.rows[v * w + u / 64] |= 1 << (u % 64);
        let popped = self.chosen.pop();
        debug_assert_eq!(popped, Some(e));
    }

    /// Forces deletions implied by protected edges. Returns the forced edges
    /// and whether the node is still feasible and worth exploring.
    fn propagate(&mut self) -> (Vec<usize>, bool) {
        let mut forced = Vec::new();
        loop {
            let mut changed = false;
            for t in 0..self.hits.len() {
                if self.hits[t] != 0 {
                    continue;
                }
                let es = self.inst.tri_edges[t];
                let open: Vec<usize> = es.iter().copied().filter(|&e| !self.protected[e]).collect();
                match open.len() {
                    0 => return (forced, false),
                    1 => {
                        self.delete(open[0]);
                        forced.push(open[0]);
                        changed = true;
                        if self.chosen.len() >= self.best_cost {
                            return (forced, false);
                        }
                    }
                    _ => {}
                }
            }
            if !changed {
                return (forced, true);
            }
        }
    }

    /// Lower bound on the deletions still needed: the better of a greedy
    /// edge-disjoint triangle packing and a dense-core bound (a triangle-free
    /// graph on `w` vertices has at most `⌊w²/4⌋` edges) topped up with
    /// triangles that avoid the core's edges.
    fn lower_bound(&mut self) -> usize {
        let n = self.inst.n;
        let w = self.words;

        self.scratch_used.fill(false);
        let mut greedy = 0;
        for t in 0..self.hits.len() {
            let es = self.inst.tri_edges[t];
            if self.hits[t] == 0 && es.iter().all(|&e| !self.scratch_used[e]) {
                es.iter().for_each(|&e| self.scratch_used[e] = true);
                greedy += 1;
            }
        }

        let mut in_core = vec![0u64; w];
        for v in 0..n {
            in_core[v / 64] |= 1 << (v % 64);
        }
        let mut deg: Vec<usize> = (0..n)
            .map(|v| {
                self.rows[v * w..(v + 1) * w]
                    .iter()
                    .zip(&in_core)
                    .map(|(a, b)| (a & b).count_ones() as usize)
                    .sum()
            })
            .collect();
        let mut size = n;
        let mut edges_in: usize = deg.iter().sum::<usize>() / 2;
        let mut best_core = (edges_in.saturating_sub(size * size / 4), in_core.clone());
        while size > 2 {
            let v = iter_ones(&in_core)
                .min_by_key(|&v| (deg[v], v))
                .expect("core nonempty");
            in_core[v / 64] &= !(1 << (v % 64));
            size -= 1;
            edges_in -= deg[v];
            for u in iter_ones(&self.rows[v * w..(v + 1) * w]) {
                if (in_core[u / 64] >> (u % 64)) & 1 == 1 {
                    deg[u] -= 1;
                }
            }
            let bound = edges_in.saturating_sub(size * size / 4);
            if bound > best_core.0 {
                best_core = (bound, in_core.clone());
            }
        }
        let (core_bound, core) = best_core;
        let mut total = core_bound;
        if core_bound > 0 {
            let in_c = |v: usize| (core[v / 64] >> (v % 64)) & 1 == 1;
            self.scratch_used.fill(false);
            for t in 0..self.hits.len() {
                if self.hits[t] != 0 {
                    continue;
                }
                let inside = self.inst.triangles[t]
                    .vertices()
                    .iter()
                    .filter(|&&v| in_c(v))
                    .count();
                let es = self.inst.tri_edges[t];
                if inside <= 1 && es.iter().all(|&e| !self.scratch_used[e]) {
                    es.iter().for_each(|&e| self.scratch_used[e] = true);
                    total += 1;
                }
            }
        }
        greedy.max(total)
    }

    fn run(&mut self) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }
        if self.chosen.len() >= self.best_cost {
            return;
        }
        let (forced, feasible) = self.propagate();
        if feasible {
            self.explore();
        }
        for &e in forced.iter().rev() {
            self.undelete(e);
        }
    }

    fn explore(&mut self) {
        let Some(t) = self.hits.iter().position(|&h| h == 0) else {
            self.best_cost = self.chosen.len();
            self.best = self.chosen.clone();
            self.best.sort_unstable();
            return;
        };
        if self.chosen.len() + self.lower_bound() >= self.best_cost {
            return;
        }
        let es = self.inst.tri_edges[t];
        let mut newly_protected = Vec::with_capacity(3);
        for &e in &es {
            if self.protected[e] {
                continue;
            }
            self.delete(e);
            self.run();
            self.undelete(e);
            if self.aborted {
                break;
            }
            self.protected[e] = true;
            newly_protected.push(e);
        }
        for e in newly_protected {
            self.protected[e] = false;
        }
    }
}

/// An exact non-negative rational in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        if num == 0 {
            return Ratio { num: 0, den: 1 };
        }
        let g = gcd(num, den);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    /// `num / den ≤ k`.
    pub fn at_most(&self, k: u64) -> bool {
        self.num <= k * self.den
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// `τ(G)/μ(G)` as an exact fraction; triangle-free graphs report `0/1`.
pub fn tuza_gap(g: &Graph, budget: u64) -> Result<Ratio> {
    let mu = exact_mu(g, budget);
    if !mu.exact {
        return Err(Error::Inexact(budget));
    }
    let tau = exact_tau(g, budget);
    if !tau.exact {
        return Err(Error::Inexact(budget));
    }
    ratio_of(tau.value, mu.value)
}

pub(crate) fn ratio_of(tau: usize, mu: usize) -> Result<Ratio> {
    match (tau, mu) {
        (0, 0) => Ok(Ratio::new(0, 1)),
        (t, 0) => Err(Error::Invariant(format!(
            "hitting number {t} with no packable triangle"
        ))),
        (t, m) => Ok(Ratio::new(t as u64, m as u64)),
    }
}
