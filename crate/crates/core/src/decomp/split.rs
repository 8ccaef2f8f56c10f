use serde::Serialize;

use crate::certificate::TrianglePacking;
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, Triangle};

use super::matching::clique_matchings;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LeftoverKind {
    Matching,
    Star,
}

/// A packing of the complete split graph `K + S` with `|K| = |S|` that uses
/// every clique edge, plus the cross edges it leaves unused.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SplitPackingResult {
    pub triangles: TrianglePacking,
    pub leftover: EdgeSet,
    pub leftover_kind: LeftoverKind,
    pub star_center: Option<usize>,
}

/// Free choices in [`pack_split`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SplitChoice {
    /// Even `|K|`: the vertex of `S` left as the centre of the unused star.
    /// Defaults to the first vertex of `S`.
    pub star_center: Option<usize>,
    /// Odd `|K|`: position `0..=|K|` of the phantom vertex added to `K`
    /// before decomposing. Defaults to 0.
    pub omit: Option<usize>,
}

/// Packs every edge of `clique` into triangles with apexes from `indep`
/// (`|indep| == |clique|`), one clique edge and one apex per triangle.
///
/// Even `|K|` leaves a star of `|K|` edges at the chosen centre. Odd `|K|`
/// leaves a perfect matching between `K` and `S`.
pub fn pack_split(
    clique: &[usize],
    indep: &[usize],
    choice: SplitChoice,
) -> Result<SplitPackingResult> {
    let k = clique.len();
    if indep.len() != k {
        return Err(Error::input(format!(
            "split packing needs |S| = |K|, got {} and {k}",
            indep.len()
        )));
    }
    let mut triangles = Vec::with_capacity(k * k.saturating_sub(1) / 2);
    let mut leftover = EdgeSet::new();

    if k.is_multiple_of(2) {
        if choice.omit.is_some() {
            return Err(Error::input(
                "an omitted matching applies only to odd cliques",
            ));
        }
        if k == 0 {
            if let Some(c) = choice.star_center {
                return Err(Error::input(format!("star centre {c} is not in S")));
            }
            return Ok(SplitPackingResult {
                triangles: TrianglePacking::default(),
                leftover,
                leftover_kind: LeftoverKind::Star,
                star_center: None,
            });
        }
        let center = choice.star_center.unwrap_or(indep[0]);
        if !indep.contains(&center) {
            return Err(Error::input(format!("star centre {center} is not in S")));
        }
        let others: Vec<usize> = indep.iter().copied().filter(|&s| s != center).collect();
        for (m, &apex) in clique_matchings(k).matchings.iter().zip(&others) {
            for e in m {
                triangles.push(Triangle::of(clique[e.u()], clique[e.v()], apex));
            }
        }
        leftover.extend(clique.iter().map(|&c| Edge::of(c, center)));
        return Ok(SplitPackingResult {
            triangles: triangles.into(),
            leftover,
            leftover_kind: LeftoverKind::Star,
            star_center: Some(center),
        });
    }

    if choice.star_center.is_some() {
        return Err(Error::input("a star centre applies only to even cliques"));
    }
    let phantom = choice.omit.unwrap_or(0);
    if phantom > k {
        return Err(Error::input(format!(
            "omitted position {phantom} is outside 0..={k}"
        )));
    }
    let real = |x: usize| clique[if x < phantom { x } else { x - 1 }];
    for (m, &apex) in clique_matchings(k + 1).matchings.iter().zip(indep) {
        for e in m {
            if let Some(x) = e.other(phantom) {
                leftover.insert(Edge::of(real(x), apex));
            } else {
                triangles.push(Triangle::of(real(e.u()), real(e.v()), apex));
            }
        }
    }
    Ok(SplitPackingResult {
        triangles: triangles.into(),
        leftover,
        leftover_kind: LeftoverKind::Matching,
        star_center: None,
    })
}

/// [`pack_split`] on the abstract split graph with `K = 0..k`, `S = k..2k`.
/// `star_center` is an index into `S`.
pub fn split_packing(
    k: usize,
    star_center: Option<usize>,
    omit: Option<usize>,
) -> Result<SplitPackingResult> {
    let clique: Vec<usize> = (0..k).collect();
    let indep: Vec<usize> = (k..2 * k).collect();
    let star_center = match star_center {
        Some(j) if j >= k => {
            return Err(Error::input(format!("star centre index {j} is outside S")));
        }
        other => other.map(|j| k + j),
    };
    pack_split(&clique, &indep, SplitChoice { star_center, omit })
}

/// Packs edges of `clique` with apexes taken in order from `apexes`.
///
/// Fewer apexes than clique vertices: one matching per apex,
/// `|apexes|·⌊|K|/2⌋` triangles. Otherwise the first `|K|` apexes cover all
/// of `E(K)`.
pub fn pack_edges_with(clique: &[usize], apexes: &[usize]) -> Vec<Triangle> {
    let k = clique.len();
    if apexes.len() < k {
        clique_matchings(k)
            .matchings
            .iter()
            .zip(apexes)
            .flat_map(|(m, &a)| {
                m.iter()
                    .map(move |e| Triangle::of(clique[e.u()], clique[e.v()], a))
            })
            .collect()
    } else {
        pack_split(clique, &apexes[..k], SplitChoice::default())
            .expect("sizes match")
            .triangles
            .into_inner()
    }
}

/// Size of the [`pack_edges_with`] packing for `k` clique vertices and `s`
/// apexes.
pub fn cor23_size(k: usize, s: usize) -> usize {
    if s < k {
        s * (k / 2)
    } else {
        k * k.saturating_sub(1) / 2
    }
}

/// [`pack_edges_with`] on `K = 0..k_size` against `S = k_size..k_size+s_size`.
pub fn pack_clique_against_is(k_size: usize, s_size: usize) -> TrianglePacking {
    let clique: Vec<usize> = (0..k_size).collect();
    let apexes: Vec<usize> = (k_size..k_size + s_size).collect();
    pack_edges_with(&clique, &apexes).into()
}
