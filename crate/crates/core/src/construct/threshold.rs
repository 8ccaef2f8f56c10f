use crate::certificate::{HittingSet, TrianglePacking};
use crate::classes::{compute_threshold_x, ThresholdRepr};
use crate::decomp::pack_edges_with;
use crate::error::{Error, Result};
use crate::graph::EdgeSet;

use super::{c2, clique_edges, cross_edges, CaseBounds, CaseLabel, ConstructionReport};

/// Case and guaranteed sizes for a clique of `k` vertices and `|X| = x`.
pub fn threshold_bounds(k: usize, x: usize) -> CaseBounds {
    let (k, x) = (k as i64, x as i64);
    let (label, packing_bound, hitting_bound) = if k % 2 == 0 {
        let h = k / 2;
        if x >= h {
            (CaseLabel::EvenBigX, 2 * c2(h), c2(k - 1))
        } else {
            (
                CaseLabel::EvenSmallX,
                c2(h) + x * (k / 4),
                2 * c2(h) + x * (h - 1),
            )
        }
    } else if x >= (k + 1) / 2 {
        (CaseLabel::OddBigX, (k - 1) * (k - 1) / 4, c2(k - 1))
    } else {
        let hp = (k - 1) / 2;
        (
            CaseLabel::OddSmallX,
            hp * ((k + 1) / 4) + (x * ((k - 1) / 4)).min(c2(hp)),
            c2((k + 1) / 2) + c2(hp) + x * (k - 3) / 2,
        )
    };
    CaseBounds {
        label,
        packing_bound,
        hitting_bound,
    }
}

/// Packing and hitting of a threshold graph from a normalized
/// representation.
pub fn threshold_construct(r: &ThresholdRepr) -> Result<ConstructionReport> {
    if !r.is_normalized() {
        return Err(Error::precondition(
            "threshold representation is not normalized: the last clique vertex has a neighbour in S",
        ));
    }
    let g = r.graph();
    let c = r.clique();
    let k = c.len();
    let x = compute_threshold_x(r);
    let xs = x.members();
    let bounds = threshold_bounds(k, xs.len());

    // Edges of K avoiding the last clique vertex.
    let all_but_last = || -> EdgeSet { clique_edges(&c[..k.saturating_sub(1)]).collect() };
    // Both halves plus everything from S into the bottom half.
    let halves_and_s = |split: usize| -> EdgeSet {
        let (top, bot) = c.split_at(split);
        let mut h: EdgeSet = clique_edges(top).chain(clique_edges(bot)).collect();
        h.extend(cross_edges(g, r.independent(), bot));
        h
    };

    let (packing, hitting) = match bounds.label {
        CaseLabel::EvenBigX | CaseLabel::EvenSmallX | CaseLabel::OddBigX => {
            let (top, bot) = c.split_at(k.div_ceil(2));
            let mut p = pack_edges_with(bot, top);
            p.extend(pack_edges_with(top, xs));
            let h = if bounds.label == CaseLabel::EvenSmallX {
                halves_and_s(k / 2)
            } else {
                all_but_last()
            };
            (p, h)
        }
        CaseLabel::OddSmallX => {
            let (top, bot) = c.split_at((k - 1) / 2);
            let mut p = pack_edges_with(bot, top);
            p.extend(pack_edges_with(top, xs));
            (p, halves_and_s(k.div_ceil(2)))
        }
        other => unreachable!("threshold case {other}"),
    };
    Ok(ConstructionReport::new(
        bounds,
        TrianglePacking::new(packing),
        HittingSet::new(hitting),
        Vec::new(),
    ))
}
