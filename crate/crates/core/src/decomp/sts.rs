use crate::graph::Triangle;

/// A Steiner triple system on points `0..v`: triangles partitioning
/// `E(K_v)`. Exists exactly for `v ≡ 1, 3 (mod 6)`.
pub fn steiner_triple_system(v: usize) -> Option<Vec<Triangle>> {
    let mut triples = match v % 6 {
        3 => bose(v / 3),
        1 => skolem((v - 1) / 6),
        _ => return None,
    };
    triples.sort();
    Some(triples)
}

/// Bose construction on `Z_m × Z_3`, `m` odd, with the idempotent
/// commutative quasigroup `x∘y = (x+y)(m+1)/2 mod m`. Point `(x, i)` is
/// `i·m + x`.
fn bose(m: usize) -> Vec<Triangle> {
    let op = |x: usize, y: usize| (x + y) * m.div_ceil(2) % m;
    let p = |x: usize, i: usize| (i % 3) * m + x;
    let mut out: Vec<Triangle> = (0..m)
        .map(|x| Triangle::of(p(x, 0), p(x, 1), p(x, 2)))
        .collect();
    for i in 0..3 {
        for x in 0..m {
            for y in x + 1..m {
                out.push(Triangle::of(p(x, i), p(y, i), p(op(x, y), i + 1)));
            }
        }
    }
    out
}

/// Skolem construction on `Z_{2n} × Z_3 ∪ {∞}` with the half-idempotent
/// commutative quasigroup `x∘y = σ((x+y) mod 2n)`, `σ(k) = ⌊k/2⌋ + n(k mod 2)`.
/// Point `(x, i)` is `i·2n + x` and `∞` is `6n`.
fn skolem(n: usize) -> Vec<Triangle> {
    let q = 2 * n;
    let op = |x: usize, y: usize| {
        let s = (x + y) % q;
        s / 2 + n * (s % 2)
    };
    let p = |x: usize, i: usize| (i % 3) * q + x;
    let inf = 6 * n;
    let mut out = Vec::new();
    for x in 0..n {
        out.push(Triangle::of(p(x, 0), p(x, 1), p(x, 2)));
        for i in 0..3 {
            out.push(Triangle::of(inf, p(x + n, i), p(x, i + 1)));
        }
    }
    for i in 0..3 {
        for x in 0..q {
            for y in x + 1..q {
                out.push(Triangle::of(p(x, i), p(y, i), p(op(x, y), i + 1)));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::TrianglePacking;
    use crate::graph::Graph;

    #[test]
    fn systems_partition_the_clique() {
        for v in 1..=99 {
            match steiner_triple_system(v) {
                Some(t) => {
                    assert!(v % 6 == 1 || v % 6 == 3);
                    assert_eq!(t.len(), v * (v - 1) / 6, "v={v}");
                    TrianglePacking::new(t)
                        .check(&Graph::complete(v).unwrap())
                        .unwrap();
                }
                None => assert!(v % 6 != 1 && v % 6 != 3),
            }
        }
    }
}
