use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::certificate::TrianglePacking;
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, Graph, Triangle};
use crate::oracle::{exact_mu_seeded, DEFAULT_BUDGET};

use super::sts::steiner_triple_system;

pub const DEFAULT_EXACT_CAP: usize = 13;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliquePackingResult {
    pub n: usize,
    pub triangles: TrianglePacking,
    pub leave: EdgeSet,
    pub optimal: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliquePackingOptions {
    /// Largest `n ≡ 4, 5 (mod 6)` solved by exact search.
    pub exact_cap: usize,
    pub seed: u64,
    /// Local search steps; `None` scales with `n²`.
    pub max_iters: Option<u64>,
}

impl Default for CliquePackingOptions {
    fn default() -> Self {
        CliquePackingOptions {
            exact_cap: DEFAULT_EXACT_CAP,
            seed: 0,
            max_iters: None,
        }
    }
}

/// Number of edges of `K_n` left uncovered by a maximum triangle packing.
pub fn clique_leave_size(n: usize) -> usize {
    match n % 6 {
        1 | 3 => 0,
        5 => 4,
        0 | 2 => n / 2,
        _ => n / 2 + 1,
    }
}

/// Maximum triangle packing of `K_n` on vertices `0..n`.
pub fn max_clique_packing(n: usize) -> Result<CliquePackingResult> {
    max_clique_packing_with(n, &CliquePackingOptions::default())
}

pub fn max_clique_packing_with(
    n: usize,
    opts: &CliquePackingOptions,
) -> Result<CliquePackingResult> {
    if n < 3 {
        return Err(Error::input(format!(
            "clique packing needs n >= 3, got {n}"
        )));
    }
    let (triangles, exact) = match n % 6 {
        1 | 3 => (steiner_triple_system(n).expect("admissible order"), true),
        0 | 2 => {
            let t = steiner_triple_system(n + 1).expect("admissible order");
            (t.into_iter().filter(|t| !t.contains(n)).collect(), true)
        }
        _ => {
            let greedy = greedy_packing(n);
            if n <= opts.exact_cap {
                let g = Graph::complete(n)?;
                let seed = TrianglePacking::new(greedy);
                let r = exact_mu_seeded(&g, DEFAULT_BUDGET, Some(&seed));
                let exact = r.exact;
                let p = r.packing().cloned().unwrap_or_default().into_inner();
                (p, exact)
            } else {
                let target = (n * (n - 1) / 2 - clique_leave_size(n)) / 3;
                let iters = opts.max_iters.unwrap_or(50 * (n * n) as u64 + 10_000);
                (hill_climb(n, greedy, target, opts.seed, iters), false)
            }
        }
    };
    let mut triangles = triangles;
    triangles.sort();
    let packing = TrianglePacking::new(triangles);
    let leave = Graph::complete(n)?
        .edge_set()
        .difference(&packing.covered_edges());
    // A leave of table size meets the counting bound, so it is optimal.
    let optimal = exact || leave.len() == clique_leave_size(n);
    Ok(CliquePackingResult {
        n,
        triangles: packing,
        leave,
        optimal,
    })
}

/// Takes the lexicographically least triangle whose edges are all unused.
fn greedy_packing(n: usize) -> Vec<Triangle> {
    let mut used = vec![false; n * n];
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if used[a * n + b] {
                continue;
            }
            for c in b + 1..n {
                if !used[a * n + c] && !used[b * n + c] {
                    used[a * n + b] = true;
                    used[a * n + c] = true;
                    used[b * n + c] = true;
                    out.push(Triangle::of(a, b, c));
                    break;
                }
            }
        }
    }
    out
}

/// Hill-climbing on partial triple systems: pick a vertex `x` with two free
/// edges `xy`, `xz` and insert `xyz`, evicting the triangle on `yz` if any.
/// The packing never shrinks; stops at `target` or after `iters` steps.
fn hill_climb(
    n: usize,
    start: Vec<Triangle>,
    target: usize,
    seed: u64,
    iters: u64,
) -> Vec<Triangle> {
    const FREE: usize = usize::MAX;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut owner = vec![FREE; n * n];
    let mut slots: Vec<Option<Triangle>> = Vec::new();
    let mut holes: Vec<usize> = Vec::new();
    let mut free_deg = vec![n - 1; n];
    let mut count = 0;

    let set = |owner: &mut Vec<usize>, t: &Triangle, id: usize| {
        for e in t.edges() {
            owner[e.u() * n + e.v()] = id;
            owner[e.v() * n + e.u()] = id;
        }
    };
    let place = |t: Triangle,
                 owner: &mut Vec<usize>,
                 slots: &mut Vec<Option<Triangle>>,
                 holes: &mut Vec<usize>,
                 free_deg: &mut Vec<usize>| {
        let id = holes.pop().unwrap_or_else(|| {
            slots.push(None);
            slots.len() - 1
        });
        slots[id] = Some(t);
        set(owner, &t, id);
        for v in t.vertices() {
            free_deg[v] -= 2;
        }
    };
    for t in start {
        place(t, &mut owner, &mut slots, &mut holes, &mut free_deg);
        count += 1;
    }

    let mut live = Vec::with_capacity(n);
    let mut nbrs = Vec::with_capacity(n);
    for _ in 0..iters {
        if count >= target {
            break;
        }
        live.clear();
        live.extend((0..n).filter(|&v| free_deg[v] >= 2));
        let Some(&x) = live.choose(&mut rng) else {
            break;
        };
        nbrs.clear();
        nbrs.extend((0..n).filter(|&y| y != x && owner[x * n + y] == FREE));
        let i = rng.gen_range(0..nbrs.len());
        let mut j = rng.gen_range(0..nbrs.len() - 1);
        if j >= i {
            j += 1;
        }
        let (y, z) = (nbrs[i], nbrs[j]);
        let held = owner[y * n + z];
        if held == FREE {
            count += 1;
        } else {
            let old = slots[held].take().expect("owned slot");
            for e in old.edges() {
                owner[e.u() * n + e.v()] = FREE;
                owner[e.v() * n + e.u()] = FREE;
            }
            for v in old.vertices() {
                free_deg[v] += 2;
            }
            holes.push(held);
        }
        place(
            Triangle::of(x, y, z),
            &mut owner,
            &mut slots,
            &mut holes,
            &mut free_deg,
        );
    }
    slots.into_iter().flatten().collect()
}

/// Edges of `K_n` inside the two halves of a balanced bipartition; deleting
/// them leaves a complete bipartite, hence triangle-free, graph.
pub fn clique_hitting(n: usize) -> EdgeSet {
    let half = n / 2;
    let mut out = EdgeSet::new();
    for a in 0..n {
        for b in a + 1..n {
            if (a < half) == (b < half) {
                out.insert(Edge::of(a, b));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_examples() {
        let cases = [(7, 7, 0), (9, 12, 0), (6, 4, 3), (5, 2, 4), (4, 1, 3)];
        for (n, tris, leave) in cases {
            let r = max_clique_packing(n).unwrap();
            assert_eq!((r.triangles.len(), r.leave.len()), (tris, leave), "n={n}");
            assert!(r.optimal);
            r.triangles.check(&Graph::complete(n).unwrap()).unwrap();
        }
        let r = max_clique_packing(6).unwrap();
        let touched: std::collections::BTreeSet<usize> =
            r.leave.iter().flat_map(|e| [e.u(), e.v()]).collect();
        assert_eq!(touched.len(), 6);
        assert!(max_clique_packing(2).is_err());
    }

    #[test]
    fn constructions_hit_the_table() {
        for n in 3..=60 {
            if n % 6 == 4 || n % 6 == 5 {
                continue;
            }
            let r = max_clique_packing(n).unwrap();
            assert_eq!(r.leave.len(), clique_leave_size(n), "n={n}");
            assert!(r.optimal);
        }
    }

    #[test]
    fn local_search_is_valid_and_seeded() {
        let opts = CliquePackingOptions {
            exact_cap: 0,
            ..Default::default()
        };
        for n in [10, 11, 16, 17] {
            let r = max_clique_packing_with(n, &opts).unwrap();
            r.triangles.check(&Graph::complete(n).unwrap()).unwrap();
            assert_eq!(r.optimal, r.leave.len() == clique_leave_size(n));
            assert_eq!(r, max_clique_packing_with(n, &opts).unwrap());
        }
    }

    #[test]
    fn hitting_examples() {
        assert_eq!(clique_hitting(4).len(), 2);
        assert_eq!(clique_hitting(5).len(), 4);
        assert!(clique_hitting(2).is_empty());
        for n in 1..=64 {
            let h = clique_hitting(n);
            assert_eq!(h.len(), n * (n - 1) / 2 - (n / 2) * n.div_ceil(2));
            assert!(2 * h.len() <= n * (n - 1) / 2);
            let g = Graph::complete(n).unwrap();
            assert!(g.remove_edges(&h).unwrap().is_triangle_free());
        }
    }
}
