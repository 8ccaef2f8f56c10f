use crate::certificate::{HittingSet, TrianglePacking};
use crate::classes::{compute_cochain_x, CoChainRepr};
use crate::decomp::{
    clique_leave_size, cor23_size, max_clique_packing, pack_edges_with, pack_split, SplitChoice,
};
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, Triangle};
use crate::oracle::{exact_mu, exact_tau, DEFAULT_BUDGET};

use super::{c2, clique_edges, cross_edges, CaseBounds, CaseLabel, ConstructionReport};

/// Case and guaranteed sizes for half-size `ell` (even, at least 4) and
/// `|X1|, |X2|` (taken in either order). `bottom_edge` says whether some
/// edge joins the two bottom halves; it only matters for odd `x1 < ell`.
pub fn cochain_bounds(ell: usize, x1: usize, x2: usize, bottom_edge: bool) -> Result<CaseBounds> {
    if ell % 2 == 1 || ell < 4 {
        return Err(Error::precondition(format!(
            "constructive co-chain bounds need an even ell >= 4, got {ell}"
        )));
    }
    let (x1, x2) = (x1.max(x2), x1.min(x2));
    if x1 > 2 * ell || (x1 >= ell) != (x2 >= ell) {
        return Err(Error::precondition(format!(
            "x1 = {x1}, x2 = {x2} are not realizable with ell = {ell}"
        )));
    }
    let (l, a, b) = (ell as i64, x1 as i64, x2 as i64);
    let intra = 4 * c2(l);
    let bounds = |label, packing_bound, hitting_bound| CaseBounds {
        label,
        packing_bound,
        hitting_bound,
    };
    if x1 > ell {
        let b_prime = if x1 == 2 * ell {
            c2(l)
        } else {
            l / 2 * (a - l)
        };
        let label = if x1 == 2 * ell {
            CaseLabel::CcBigFull
        } else {
            CaseLabel::CcBig
        };
        return Ok(bounds(
            label,
            3 * c2(l) + b_prime + (b - l),
            3 * l * l - 2 * l + (a - l) * (b - l),
        ));
    }
    let hitting = intra + l * a + l * b - a * b;
    if x1 == ell {
        let n = 2 * ell;
        let clique = ((n * (n - 1) / 2 - clique_leave_size(n)) / 3) as i64;
        return Ok(bounds(CaseLabel::CcBalEq, 2 * c2(l) + clique, hitting));
    }
    let ab = 2 * c2(l) + cor23_size(ell, x1) as i64;
    let cd = (cor23_size(x1, ell - x1) + cor23_size(ell - x1, x2)) as i64;
    Ok(match (x1 % 2 == 1, bottom_edge) {
        (false, _) => bounds(CaseLabel::CcBalLt, ab + cd, hitting),
        (true, true) => bounds(CaseLabel::CcBalLtOdd, ab + cd + 1, hitting),
        (true, false) => bounds(CaseLabel::CcBalNoedge, ab + cd, intra + a * l),
    })
}

/// Packing and hitting of an even balanced co-chain graph.
pub fn cochain_construct(r: &CoChainRepr) -> Result<ConstructionReport> {
    cochain_construct_with_budget(r, DEFAULT_BUDGET)
}

/// [`cochain_construct`] with the node budget used by the exact fallback
/// for `ell < 4`.
pub fn cochain_construct_with_budget(r: &CoChainRepr, budget: u64) -> Result<ConstructionReport> {
    let Some(ell) = r.ell() else {
        return Err(Error::precondition(format!(
            "co-chain graph is not even balanced: sides of size {} and {}",
            r.k1().len(),
            r.k2().len()
        )));
    };
    if ell % 2 == 1 {
        return Err(Error::precondition(format!(
            "co-chain sides of size {} are not divisible by four",
            2 * ell
        )));
    }
    if ell < 4 {
        return oracle_fallback(r, budget);
    }

    let xs = compute_cochain_x(r)?;
    let mut flags = Vec::new();
    let (r, xs) = if xs.x1_len() < xs.x2_len() {
        flags.push("swapped".to_string());
        let s = r.swapped();
        let xs = compute_cochain_x(&s)?;
        (s, xs)
    } else {
        (r.clone(), xs)
    };
    let g = r.graph();
    let (k1top, k1bot, k2top, k2bot) = (r.k1_top(), r.k1_bot(), r.k2_top(), r.k2_bot());
    let x1s = xs.x1.members();
    let x2s = xs.x2.members();
    let (x1, x2) = (x1s.len(), x2s.len());

    let intra: EdgeSet = [k1top, k1bot, k2top, k2bot]
        .into_iter()
        .flat_map(clique_edges)
        .collect();
    let split = |clique: &[usize], indep: &[usize], center: Option<usize>| -> Vec<Triangle> {
        let choice = SplitChoice {
            star_center: center,
            omit: None,
        };
        pack_split(clique, indep, choice)
            .expect("halves have equal even size")
            .triangles
            .into_inner()
    };

    if x1 > ell {
        let bounds = cochain_bounds(ell, x1, x2, true)?;
        let mut hitting = intra;
        hitting.extend(cross_edges(g, k1top, k2bot));
        hitting.extend(cross_edges(g, k1bot, k2top));

        let v = k2bot[0];
        let mut packing = split(k2top, k2bot, Some(v));
        packing.extend(split(k1top, k2bot, Some(v)));
        packing.extend(split(k1bot, k1top, None));
        packing.extend(pack_edges_with(k2bot, &x1s[ell..]));
        let x2_top: Vec<usize> = x2s.iter().copied().filter(|d| k2top.contains(d)).collect();
        packing.extend(
            k1top
                .iter()
                .zip(&x2_top)
                .map(|(&a, &b)| Triangle::of(v, a, b)),
        );
        return Ok(ConstructionReport::new(
            bounds,
            TrianglePacking::new(packing),
            HittingSet::new(hitting),
            flags,
        ));
    }

    let mut hitting = intra.clone();
    hitting.extend(cross_edges(g, x1s, k2bot));
    hitting.extend(cross_edges(g, x2s, k1top));

    if x1 == ell {
        let bounds = cochain_bounds(ell, x1, x2, true)?;
        let mut packing = split(k1bot, k1top, None);
        packing.extend(split(k2top, k2bot, None));
        let clique: Vec<usize> = k1top.iter().chain(k2bot).copied().collect();
        let inner = max_clique_packing(clique.len())?;
        if !inner.optimal {
            flags.push("clique-packing-heuristic".to_string());
        }
        packing.extend(
            inner
                .triangles
                .triangles()
                .iter()
                .map(|t| t.map(|i| clique[i])),
        );
        return Ok(ConstructionReport::new(
            bounds,
            TrianglePacking::new(packing),
            HittingSet::new(hitting),
            flags,
        ));
    }

    // x1, x2 < ell: X1 is a prefix of the top of K1, X2 lies in the bottom of K2.
    let rest1: Vec<usize> = k1top.iter().copied().filter(|c| !x1s.contains(c)).collect();
    let bottom = k1bot
        .iter()
        .flat_map(|&u| k2bot.iter().map(move |&v| (u, v)))
        .find(|&(u, v)| g.has_edge(u, v));
    let bounds = cochain_bounds(ell, x1, x2, bottom.is_some())?;

    let mut apexes = x2s.to_vec();
    let repair = match (bounds.label, bottom) {
        (CaseLabel::CcBalLtOdd, Some((u, v))) => {
            let pos = apexes.iter().position(|&d| d == v).ok_or_else(|| {
                Error::Invariant(format!("bottom edge endpoint {v} is not in X2"))
            })?;
            apexes[..=pos].rotate_right(1);
            Some((u, v))
        }
        _ => None,
    };
    let d = pack_edges_with(&rest1, &apexes);
    let repair = match repair {
        Some((u, v)) => {
            let used: EdgeSet = d.iter().flat_map(|t| t.edges()).collect();
            let w = rest1
                .iter()
                .copied()
                .find(|&w| !used.contains(&Edge::of(w, v)))
                .ok_or_else(|| {
                    Error::Invariant(format!("every edge from {v} to K1 top is packed"))
                })?;
            Some(Triangle::of(u, v, w))
        }
        None => None,
    };
    let center = repair.map(|t| {
        t.vertices()
            .into_iter()
            .find(|x| rest1.contains(x))
            .expect("repair triangle meets the top of K1")
    });

    let mut packing = split(k1bot, k1top, center);
    packing.extend(split(k2top, k2bot, None));
    packing.extend(pack_edges_with(k2bot, x1s));
    packing.extend(pack_edges_with(x1s, &rest1));
    packing.extend(d);
    packing.extend(repair);

    if bounds.label == CaseLabel::CcBalNoedge {
        hitting = intra;
        hitting.extend(cross_edges(g, k1top, k2top));
    }
    Ok(ConstructionReport::new(
        bounds,
        TrianglePacking::new(packing),
        HittingSet::new(hitting),
        flags,
    ))
}

fn oracle_fallback(r: &CoChainRepr, budget: u64) -> Result<ConstructionReport> {
    let g = r.graph();
    let mu = exact_mu(g, budget);
    let tau = exact_tau(g, budget);
    if !mu.exact || !tau.exact {
        return Err(Error::Inexact(budget));
    }
    let bounds = CaseBounds {
        label: CaseLabel::OracleFallback,
        packing_bound: mu.value as i64,
        hitting_bound: tau.value as i64,
    };
    let packing = mu.packing().cloned().unwrap_or_default();
    let hitting = tau.hitting().cloned().unwrap_or_default();
    Ok(ConstructionReport::new(
        bounds,
        packing,
        hitting,
        vec!["oracle".to_string()],
    ))
}
