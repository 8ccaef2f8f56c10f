use serde::Serialize;

use crate::graph::Edge;

/// Edge-disjoint maximal matchings whose union is `E(K_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingDecomposition {
    pub k: usize,
    pub matchings: Vec<Vec<Edge>>,
}

impl MatchingDecomposition {
    pub fn len(&self) -> usize {
        self.matchings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matchings.is_empty()
    }
}

/// Round-robin decomposition of `K_k` on vertices `0..k`.
///
/// Even `k` gives `k - 1` perfect matchings. Odd `k` gives `k` matchings,
/// matching `j` missing vertex `j`.
pub fn clique_matchings(k: usize) -> MatchingDecomposition {
    let matchings = if k.is_multiple_of(2) {
        round_robin(k)
    } else {
        // Drop vertex 0 of the even construction and shift labels down; the
        // matching that used {0, j + 1} now misses j.
        round_robin(k + 1)
            .into_iter()
            .map(|m| {
                m.into_iter()
                    .filter(|e| !e.contains(0))
                    .map(|e| e.map(|x| x - 1))
                    .collect()
            })
            .collect()
    };
    MatchingDecomposition { k, matchings }
}

/// `M_i = {{0,i}} ∪ {{a,b} : a,b ≠ 0, a+b ≡ 2i (mod k-1)}` for `i = 1..k-1`,
/// with vertex `k - 1` standing for residue 0.
fn round_robin(k: usize) -> Vec<Vec<Edge>> {
    if k < 2 {
        return Vec::new();
    }
    let q = k - 1;
    (1..=q)
        .map(|i| {
            let mut m = vec![Edge::of(0, i)];
            for a in 1..=q {
                let rb = (2 * i % q + q - a % q) % q;
                let b = if rb == 0 { q } else { rb };
                if a < b {
                    m.push(Edge::of(a, b));
                }
            }
            m.sort();
            m
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn check(k: usize) {
        let d = clique_matchings(k);
        let expected = if k.is_multiple_of(2) {
            k.saturating_sub(1)
        } else {
            k
        };
        assert_eq!(d.len(), expected, "k={k}");
        let mut seen = BTreeSet::new();
        for m in &d.matchings {
            let mut touched = BTreeSet::new();
            for e in m {
                assert!(e.v() < k);
                assert!(
                    touched.insert(e.u()) && touched.insert(e.v()),
                    "not a matching"
                );
                assert!(seen.insert(*e), "edge {e} repeated");
            }
            // Maximal: at most one vertex left uncovered.
            assert!(k - touched.len() <= 1);
        }
        assert_eq!(seen.len(), k * k.saturating_sub(1) / 2);
    }

    #[test]
    fn small_cases() {
        let d = clique_matchings(6);
        assert_eq!(d.len(), 5);
        assert!(d.matchings.iter().all(|m| m.len() == 3));
        let d = clique_matchings(3);
        assert_eq!(d.len(), 3);
        assert!(d.matchings.iter().all(|m| m.len() == 1));
        for j in 0..3 {
            assert!(!d.matchings[j][0].contains(j));
        }
        let d = clique_matchings(4);
        assert_eq!(d.len(), 3);
        assert!(d.matchings.iter().all(|m| m.len() == 2));
        assert_eq!(clique_matchings(1).matchings, vec![Vec::<Edge>::new()]);
    }

    #[test]
    fn partitions_up_to_64() {
        for k in 1..=64 {
            check(k);
        }
    }
}
