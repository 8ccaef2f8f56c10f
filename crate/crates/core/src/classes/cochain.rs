//! Co-chain graphs: two cliques `K1`, `K2` whose cross neighbourhoods are
//! nested. Recognition, the even balanced view (halves and the sets `X1`,
//! `X2`), staircase profiles, and seeded sampling.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classes::XSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A co-chain representation: `k1` is `c_1..c_n` with
/// `N[c_{i+1}] ⊆ N[c_i]`, `k2` is `d_1..d_m` with `N[d_i] ⊆ N[d_{i+1}]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoChainRepr {
    graph: Graph,
    k1: Vec<usize>,
    k2: Vec<usize>,
}

impl CoChainRepr {
    pub fn new(graph: Graph, k1: Vec<usize>, k2: Vec<usize>) -> Result<Self> {
        let n = graph.n();
        let mut seen = vec![false; n];
        for &v in k1.iter().chain(&k2) {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::input(format!("vertex {v} listed twice")));
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::input("clique orders do not cover the graph"));
        }
        for side in [&k1, &k2] {
            for (i, &a) in side.iter().enumerate() {
                if let Some(&b) = side[i + 1..].iter().find(|&&b| !graph.has_edge(a, b)) {
                    return Err(Error::input(format!(
                        "vertices {a} and {b} share a side but are not adjacent"
                    )));
                }
            }
        }
        for w in k1.windows(2) {
            if let Some(&d) = k2
                .iter()
                .find(|&&d| graph.has_edge(w[1], d) && !graph.has_edge(w[0], d))
            {
                return Err(Error::input(format!(
                    "N[{}] is not contained in N[{}] (vertex {d})",
                    w[1], w[0]
                )));
            }
        }
        for w in k2.windows(2) {
            if let Some(&c) = k1
                .iter()
                .find(|&&c| graph.has_edge(w[0], c) && !graph.has_edge(w[1], c))
            {
                return Err(Error::input(format!(
                    "N[{}] is not contained in N[{}] (vertex {c})",
                    w[0], w[1]
                )));
            }
        }
        Ok(CoChainRepr { graph, k1, k2 })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn k1(&self) -> &[usize] {
        &self.k1
    }

    pub fn k2(&self) -> &[usize] {
        &self.k2
    }

    /// Both sides have the same even size `2ℓ`.
    pub fn is_balanced_even(&self) -> bool {
        self.k1.len() == self.k2.len() && self.k1.len().is_multiple_of(2)
    }

    /// Both sides have the same size, divisible by four.
    pub fn is_even_balanced(&self) -> bool {
        self.k1.len() == self.k2.len() && self.k1.len().is_multiple_of(4)
    }

    /// Half the side size, when [`is_balanced_even`](Self::is_balanced_even).
    pub fn ell(&self) -> Option<usize> {
        self.is_balanced_even().then_some(self.k1.len() / 2)
    }

    pub fn k1_top(&self) -> &[usize] {
        &self.k1[..self.k1.len() / 2]
    }

    pub fn k1_bot(&self) -> &[usize] {
        &self.k1[self.k1.len() / 2..]
    }

    pub fn k2_top(&self) -> &[usize] {
        &self.k2[..self.k2.len() / 2]
    }

    pub fn k2_bot(&self) -> &[usize] {
        &self.k2[self.k2.len() / 2..]
    }

    /// Exchanges the roles of the two cliques (orders reversed so that the
    /// nesting directions still hold).
    pub fn swapped(&self) -> CoChainRepr {
        CoChainRepr {
            graph: self.graph.clone(),
            k1: self.k2.iter().rev().copied().collect(),
            k2: self.k1.iter().rev().copied().collect(),
        }
    }

    /// Cross-neighbourhood sizes `|N(c_i) ∩ K2|` along `k1`.
    pub fn profile(&self) -> Vec<usize> {
        self.k1
            .iter()
            .map(|&c| {
                self.k2
                    .iter()
                    .filter(|&&d| self.graph.has_edge(c, d))
                    .count()
            })
            .collect()
    }
}

/// `X1` and `X2` of an even-sized balanced representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoChainX {
    pub x1: XSet,
    pub x2: XSet,
}

impl CoChainX {
    pub fn x1_len(&self) -> usize {
        self.x1.len()
    }

    pub fn x2_len(&self) -> usize {
        self.x2.len()
    }
}

/// `X1 = {c ∈ K1 : K2_bot ⊆ N[c]}` and `X2 = {d ∈ K2 : K1_top ⊆ N[d]}`,
/// listed in representation order.
pub fn compute_cochain_x(r: &CoChainRepr) -> Result<CoChainX> {
    if !r.is_balanced_even() {
        return Err(Error::precondition(format!(
            "co-chain sides must have equal even size, got {} and {}",
            r.k1.len(),
            r.k2.len()
        )));
    }
    let g = &r.graph;
    let complete_to = |v: usize, set: &[usize]| set.iter().all(|&w| g.has_edge(v, w));
    let x1 =
        r.k1.iter()
            .copied()
            .filter(|&c| complete_to(c, r.k2_bot()))
            .collect();
    let x2 =
        r.k2.iter()
            .copied()
            .filter(|&d| complete_to(d, r.k1_top()))
            .collect();
    Ok(CoChainX {
        x1: XSet::new(x1, None),
        x2: XSet::new(x2, None),
    })
}

fn not_cochain(witness: Option<usize>, reason: String) -> Error {
    Error::NotInClass {
        class: "co-chain",
        witness,
        reason,
    }
}

/// Finds a co-chain representation, preferring a balanced split.
///
/// The two cliques are independent sets of the complement, so the complement
/// must be bipartite. A nontrivial complement component fixes its own split;
/// universal vertices (isolated in the complement) may sit on either side
/// and are used to balance the sides. Orders are sorted by cross degree with
/// ties by index, then the nesting is checked.
pub fn recognize_cochain(g: &Graph) -> Result<CoChainRepr> {
    let n = g.n();
    let h = g.complement();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut side_a = Vec::new();
    let mut side_b = Vec::new();
    let mut universal = Vec::new();
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        if h.degree(s) == 0 {
            color[s] = Some(true);
            universal.push(s);
            continue;
        }
        color[s] = Some(true);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let cv = color[v].expect("colored");
            if cv {
                side_a.push(v);
            } else {
                side_b.push(v);
            }
            for w in h.neighbors(v) {
                match color[w] {
                    None => {
                        color[w] = Some(!cv);
                        stack.push(w);
                    }
                    Some(cw) if cw == cv => {
                        return Err(not_cochain(
                            Some(v),
                            format!("complement has an odd cycle through vertices {v} and {w}"),
                        ))
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let t = universal.len();
    let want = (side_b.len() + t).saturating_sub(side_a.len()) / 2;
    let a = want.min(t);
    side_a.extend(&universal[..a]);
    side_b.extend(&universal[a..]);

    let cross = |v: usize, other: &[usize]| other.iter().filter(|&&w| g.has_edge(v, w)).count();
    let mut k1: Vec<(usize, usize)> = side_a.iter().map(|&v| (cross(v, &side_b), v)).collect();
    let mut k2: Vec<(usize, usize)> = side_b.iter().map(|&v| (cross(v, &side_a), v)).collect();
    k1.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
    k2.sort();
    let k1 = k1.into_iter().map(|(_, v)| v).collect();
    let k2 = k2.into_iter().map(|(_, v)| v).collect();
    CoChainRepr::new(g.clone(), k1, k2).map_err(|e| not_cochain(None, e.to_string()))
}

/// Builds the co-chain graph of a staircase profile: two cliques of size
/// `profile.len()`, where `c_i` is adjacent to the last `profile[i]`
/// vertices of `K2`. Vertices `0..size` are `K1`, `size..2·size` are `K2`.
pub fn cochain_from_profile(profile: &[usize]) -> Result<(Graph, CoChainRepr)> {
    let size = profile.len();
    if let Some(&p) = profile.iter().find(|&&p| p > size) {
        return Err(Error::input(format!(
            "profile entry {p} exceeds the clique size {size}"
        )));
    }
    if profile.windows(2).any(|w| w[1] > w[0]) {
        return Err(Error::input("profile must be non-increasing"));
    }
    let mut g = Graph::empty(2 * size)?;
    for side in [0, size] {
        for a in 0..size {
            for b in a + 1..size {
                g.add_edge(side + a, side + b);
            }
        }
    }
    for (i, &p) in profile.iter().enumerate() {
        for j in size - p..size {
            g.add_edge(i, size + j);
        }
    }
    let r = CoChainRepr::new(g.clone(), (0..size).collect(), (size..2 * size).collect())?;
    Ok((g, r))
}

/// A uniformly random non-increasing profile of length `2ℓ` with entries in
/// `0..=2ℓ`, drawn as a random lattice path.
pub fn sample_profile<R: Rng + ?Sized>(ell: usize, rng: &mut R) -> Vec<usize> {
    let size = 2 * ell;
    let mut rows = vec![false; 2 * size];
    for i in sample(rng, 2 * size, size) {
        rows[i] = true;
    }
    let mut columns_seen = 0;
    let mut profile = Vec::with_capacity(size);
    for is_row in rows {
        if is_row {
            profile.push(size - columns_seen);
        } else {
            columns_seen += 1;
        }
    }
    profile
}

/// A seeded random even-sized co-chain graph with both sides of size `2ℓ`.
pub fn sample_cochain(ell: usize, seed: u64) -> (Graph, CoChainRepr) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let profile = sample_profile(ell, &mut rng);
    cochain_from_profile(&profile).expect("sampled profiles are valid")
}

/// Every non-increasing profile of length `size` with entries in
/// `0..=size`, in lexicographic order.
pub fn monotone_profiles(size: usize) -> Vec<Vec<usize>> {
    fn rec(size: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for p in 0..=cap {
            cur.push(p);
            rec(size, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, size, &mut Vec::new(), &mut out);
    out
}

/// Parses the text form `cochain <size>` followed by `size` integers.
/// `#` starts a comment.
pub fn parse_profile(text: &str) -> Result<Vec<usize>> {
    let mut tokens = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(str::split_whitespace);
    match tokens.next() {
        Some("cochain") => {}
        other => {
            return Err(Error::input(format!(
                "profile must start with `cochain`, found {other:?}"
            )))
        }
    }
    let size: usize = tokens
        .next()
        .ok_or_else(|| Error::input("missing clique size after `cochain`"))?
        .parse()
        .map_err(|e| Error::input(format!("bad clique size: {e}")))?;
    let profile = tokens
        .map(|t| {
            t.parse::<usize>()
                .map_err(|e| Error::input(format!("bad profile entry {t:?}: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if profile.len() != size {
        return Err(Error::input(format!(
            "expected {size} profile entries, found {}",
            profile.len()
        )));
    }
    if profile.windows(2).any(|w| w[1] > w[0]) {
        return Err(Error::input("profile must be non-increasing"));
    }
    if profile.iter().any(|&p| p > size) {
        return Err(Error::input("profile entry exceeds the clique size"));
    }
    Ok(profile)
}

pub fn format_profile(profile: &[usize]) -> String {
    let body: Vec<String> = profile.iter().map(|p| p.to_string()).collect();
    format!("cochain {}\n{}\n", profile.len(), body.join(" "))
}
