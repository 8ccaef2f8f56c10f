use std::collections::HashMap;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tuza_core::classes::{enumerate_threshold, normalize_threshold};
use tuza_core::construct::threshold_construct;
use tuza_core::oracle::{exact_mu, exact_tau, tuza_gap, Ratio, DEFAULT_BUDGET};
use tuza_core::sweep::{construct, GraphClass};
use tuza_core::Graph;

/// Memoized maximum packing over edge bitmasks: the lowest remaining edge
/// is either dropped or used by one of its triangles.
fn brute_mu(g: &Graph) -> usize {
    let edges = g.edges();
    let index: HashMap<(usize, usize), usize> = edges
        .iter()
        .enumerate()
        .map(|(i, e)| ((e.u(), e.v()), i))
        .collect();
    let id = |a: usize, b: usize| index.get(&(a.min(b), a.max(b))).copied();
    fn rec(
        mask: u64,
        edges: &[tuza_core::Edge],
        n: usize,
        id: &dyn Fn(usize, usize) -> Option<usize>,
        memo: &mut HashMap<u64, usize>,
    ) -> usize {
        if mask == 0 {
            return 0;
        }
        if let Some(&v) = memo.get(&mask) {
            return v;
        }
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << i);
        let (u, v) = (edges[i].u(), edges[i].v());
        let mut best = rec(rest, edges, n, id, memo);
        for w in 0..n {
            if let (Some(a), Some(b)) = (id(u, w), id(v, w)) {
                if rest & (1 << a) != 0 && rest & (1 << b) != 0 {
                    best = best.max(1 + rec(rest & !(1 << a) & !(1 << b), edges, n, id, memo));
                }
            }
        }
        memo.insert(mask, best);
        best
    }
    let full = if edges.is_empty() {
        0
    } else {
        u64::MAX >> (64 - edges.len())
    };
    rec(full, &edges, g.n(), &id, &mut HashMap::new())
}

/// Memoized minimum hitting over triangle bitmasks: some edge of the first
/// unhit triangle must be taken.
fn brute_tau(g: &Graph) -> usize {
    let tris = g.triangles();
    let edges = g.edges();
    let hits: Vec<u128> = edges
        .iter()
        .map(|e| {
            tris.iter()
                .enumerate()
                .filter(|(_, t)| t.edges().contains(e))
                .fold(0u128, |m, (j, _)| m | 1 << j)
        })
        .collect();
    let edge_of: HashMap<tuza_core::Edge, usize> =
        edges.iter().enumerate().map(|(i, e)| (*e, i)).collect();
    fn rec(
        left: u128,
        tris: &[tuza_core::Triangle],
        hits: &[u128],
        edge_of: &HashMap<tuza_core::Edge, usize>,
        memo: &mut HashMap<u128, usize>,
    ) -> usize {
        if left == 0 {
            return 0;
        }
        if let Some(&v) = memo.get(&left) {
            return v;
        }
        let t = &tris[left.trailing_zeros() as usize];
        let best = t
            .edges()
            .iter()
            .map(|e| 1 + rec(left & !hits[edge_of[e]], tris, hits, edge_of, memo))
            .min()
            .unwrap();
        memo.insert(left, best);
        best
    }
    let full = if tris.is_empty() {
        0
    } else {
        u128::MAX >> (128 - tris.len())
    };
    rec(full, &tris, &hits, &edge_of, &mut HashMap::new())
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(prop::bool::weighted(0.65), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// A co-chain graph with sides `a` and `b`: `c_i` of the first clique sees
/// the last `profile[i]` vertices of the second.
fn cochain(max_total: usize) -> impl Strategy<Value = Graph> {
    (1..=max_total / 2, 1..=max_total / 2).prop_flat_map(|(a, b)| {
        prop::collection::vec(0..=b, a).prop_map(move |mut profile| {
            profile.sort_unstable_by(|x, y| y.cmp(x));
            let mut edges = Vec::new();
            for side in [(0, a), (a, a + b)] {
                for x in side.0..side.1 {
                    for y in x + 1..side.1 {
                        edges.push((x, y));
                    }
                }
            }
            for (i, &p) in profile.iter().enumerate() {
                for j in b - p..b {
                    edges.push((i, a + j));
                }
            }
            Graph::from_edges(a + b, &edges).unwrap()
        })
    })
}

fn check_witnesses(g: &Graph) -> (usize, usize) {
    let mu = exact_mu(g, DEFAULT_BUDGET);
    let tau = exact_tau(g, DEFAULT_BUDGET);
    assert!(mu.exact && tau.exact);
    let p = mu.packing().unwrap();
    p.check(g).unwrap();
    assert_eq!(p.len(), mu.value);
    let h = tau.hitting().unwrap();
    h.check(g).unwrap();
    assert_eq!(h.len(), tau.value);
    (mu.value, tau.value)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn oracle_agrees_with_brute_force(g in graph(8)) {
        let (mu, tau) = check_witnesses(&g);
        prop_assert_eq!(mu, brute_mu(&g));
        prop_assert_eq!(tau, brute_tau(&g));
        prop_assert!(mu <= tau && tau <= 3 * mu);
    }

    #[test]
    fn values_survive_relabelling(g in graph(9), seed in any::<u64>()) {
        let (mu, tau) = check_witnesses(&g);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..3 {
            let mut perm: Vec<usize> = (0..g.n()).collect();
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm).unwrap();
            prop_assert_eq!(check_witnesses(&h), (mu, tau));
        }
    }

    #[test]
    fn ratio_bound_holds_on_small_cochains(g in cochain(12)) {
        let (mu, tau) = check_witnesses(&g);
        prop_assert!(tau <= 2 * mu, "tau={} mu={}", tau, mu);
        prop_assert!(tuza_gap(&g, DEFAULT_BUDGET).unwrap().at_most(2));
    }

    #[test]
    fn certificates_sandwich_the_optimum(profile in prop::collection::vec(0usize..=4, 4)) {
        let mut profile = profile;
        profile.sort_unstable_by(|x, y| y.cmp(x));
        let (g, r) = tuza_core::classes::cochain_from_profile(&profile).unwrap();
        let (_, report) = construct(&g, Some(GraphClass::Cochain), Some(&r), DEFAULT_BUDGET).unwrap();
        let (mu, tau) = check_witnesses(&g);
        prop_assert!(report.packing.len() <= mu);
        prop_assert!(report.hitting.len() >= tau);
    }
}

#[test]
fn threshold_sandwich_and_ratio_up_to_ten() {
    for n in 1..=10 {
        for (g, r) in enumerate_threshold(n) {
            let report = threshold_construct(&normalize_threshold(&r)).unwrap();
            let (mu, tau) = check_witnesses(&g);
            assert!(report.packing.len() <= mu);
            assert!(report.hitting.len() >= tau);
            assert!(tau <= 2 * mu);
        }
    }
}

#[test]
fn clique_values() {
    // (C(n,2) - leave) / 3 with leave 0, 4, n/2, n/2 + 1 by n mod 6.
    for n in 3..=10usize {
        let leave = match n % 6 {
            1 | 3 => 0,
            5 => 4,
            0 | 2 => n / 2,
            _ => n / 2 + 1,
        };
        let k = Graph::complete(n).unwrap();
        let (mu, tau) = check_witnesses(&k);
        assert_eq!(mu, (n * (n - 1) / 2 - leave) / 3, "K{n}");
        // Turán: the densest triangle-free subgraph is complete bipartite.
        assert_eq!(tau, n * (n - 1) / 2 - (n / 2) * (n - n / 2), "K{n}");
    }
}

#[test]
fn gap_ratio() {
    assert_eq!(
        tuza_gap(&Graph::complete(4).unwrap(), DEFAULT_BUDGET).unwrap(),
        Ratio::new(2, 1)
    );
    assert_eq!(
        tuza_gap(&Graph::complete(6).unwrap(), DEFAULT_BUDGET).unwrap(),
        Ratio::new(3, 2)
    );
    assert_eq!(
        tuza_gap(&Graph::complete(7).unwrap(), DEFAULT_BUDGET)
            .unwrap()
            .to_string(),
        "9/7"
    );
    assert_eq!(
        tuza_gap(&Graph::empty(5).unwrap(), DEFAULT_BUDGET).unwrap(),
        Ratio::new(0, 1)
    );
    assert!(tuza_gap(&Graph::complete(9).unwrap(), 0).is_err());
}
