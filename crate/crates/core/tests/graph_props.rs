use proptest::prelude::*;
use tuza_core::io::{format_edge_list, parse_edge_list};
use tuza_core::{Edge, EdgeSet, Graph, Triangle};

/// A graph on `0..=max_n` vertices with each pair present independently.
fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn graph_with_subset(max_n: usize) -> impl Strategy<Value = (Graph, EdgeSet)> {
    graph(max_n).prop_flat_map(|g| {
        let edges = g.edges();
        prop::collection::vec(any::<bool>(), edges.len()).prop_map(move |keep| {
            let h: EdgeSet = edges
                .iter()
                .zip(keep)
                .filter(|(_, k)| *k)
                .map(|(e, _)| *e)
                .collect();
            (g.clone(), h)
        })
    })
}

fn brute_triangles(g: &Graph) -> Vec<Triangle> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c) {
                    out.push(Triangle::new(a, b, c).unwrap());
                }
            }
        }
    }
    out
}

proptest! {
    #[test]
    fn removing_edges_keeps_exactly_the_avoiding_triangles((g, h) in graph_with_subset(10)) {
        let rest = g.remove_edges(&h).unwrap();
        let expected: Vec<Triangle> = brute_triangles(&g)
            .into_iter()
            .filter(|t| t.edges().iter().all(|e| !h.contains(e)))
            .collect();
        prop_assert_eq!(rest.triangles(), expected);
        prop_assert_eq!(rest.edge_count(), g.edge_count() - h.len());
    }

    #[test]
    fn triangle_enumeration_matches_brute_force(g in graph(10)) {
        prop_assert_eq!(g.triangles(), brute_triangles(&g));
        prop_assert_eq!(g.is_triangle_free(), brute_triangles(&g).is_empty());
    }

    #[test]
    fn degree_sum_is_twice_edge_count(g in graph(12)) {
        let total: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
        for v in 0..g.n() {
            prop_assert_eq!(g.neighbors(v).count(), g.degree(v));
        }
    }

    #[test]
    fn edge_read_back_is_canonical(
        n in 2usize..12,
        raw in prop::collection::vec((0usize..12, 0usize..12), 0..40),
    ) {
        let pairs: Vec<(usize, usize)> =
            raw.into_iter().map(|(a, b)| (a % n, b % n)).filter(|(a, b)| a != b).collect();
        let g = Graph::from_edges(n, &pairs).unwrap();
        let mut canon: Vec<Edge> = pairs.iter().map(|&(a, b)| Edge::new(a, b).unwrap()).collect();
        canon.sort();
        canon.dedup();
        prop_assert_eq!(g.edges(), canon);
        let again = parse_edge_list(&format_edge_list(&g)).unwrap();
        prop_assert_eq!(again, g);
    }

    #[test]
    fn relabel_preserves_triangle_count(g in graph(9), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(h.edge_count(), g.edge_count());
        prop_assert_eq!(h.triangles().len(), g.triangles().len());
        for e in g.edges() {
            prop_assert!(h.has_edge(perm[e.u()], perm[e.v()]));
        }
    }

    #[test]
    fn complement_partitions_pairs(g in graph(10)) {
        let c = g.complement();
        let n = g.n();
        prop_assert_eq!(g.edge_count() + c.edge_count(), n * n.saturating_sub(1) / 2);
        prop_assert!(g.edge_set().is_disjoint(&c.edge_set()));
    }
}

#[test]
fn complete_graph_triangle_counts() {
    for n in 0..=12usize {
        let k = Graph::complete(n).unwrap();
        let c3 = n * n.saturating_sub(1) * n.saturating_sub(2) / 6;
        assert_eq!(k.triangles().len(), c3, "K{n}");
        assert_eq!(k.edge_count(), n * n.saturating_sub(1) / 2);
    }
}

#[test]
fn malformed_inputs_are_rejected() {
    assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
    assert!(parse_edge_list("3 2\n0 1\n").is_err());
    assert!(parse_edge_list("").is_err());
    assert!(parse_edge_list("2 1\n0 -1\n").is_err());
    let g = Graph::complete(3).unwrap();
    let h: EdgeSet = [Edge::new(0, 1).unwrap()].into_iter().collect();
    let path = g.remove_edges(&h).unwrap();
    assert!(path.remove_edges(&h).is_err());
}
