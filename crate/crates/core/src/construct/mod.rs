//! Explicit packing/hitting pairs for threshold and even balanced co-chain
//! graphs, each with the size guarantees of its case.

mod cochain;
mod threshold;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::certificate::{HittingSet, TrianglePacking};
use crate::graph::{Edge, EdgeSet, Graph};

pub use cochain::{cochain_bounds, cochain_construct, cochain_construct_with_budget};
pub use threshold::{threshold_bounds, threshold_construct};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CaseLabel {
    EvenBigX,
    EvenSmallX,
    OddBigX,
    OddSmallX,
    CcBalEq,
    CcBalLt,
    CcBalLtOdd,
    CcBalNoedge,
    CcBig,
    CcBigFull,
    OracleFallback,
}

impl CaseLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseLabel::EvenBigX => "EVEN_BIG_X",
            CaseLabel::EvenSmallX => "EVEN_SMALL_X",
            CaseLabel::OddBigX => "ODD_BIG_X",
            CaseLabel::OddSmallX => "ODD_SMALL_X",
            CaseLabel::CcBalEq => "CC_BAL_EQ",
            CaseLabel::CcBalLt => "CC_BAL_LT",
            CaseLabel::CcBalLtOdd => "CC_BAL_LT_ODD",
            CaseLabel::CcBalNoedge => "CC_BAL_NOEDGE",
            CaseLabel::CcBig => "CC_BIG",
            CaseLabel::CcBigFull => "CC_BIG_FULL",
            CaseLabel::OracleFallback => "ORACLE_FALLBACK",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Case of a construction and the sizes it guarantees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CaseBounds {
    pub label: CaseLabel,
    pub packing_bound: i64,
    pub hitting_bound: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ConstructionReport {
    pub case_label: CaseLabel,
    pub packing: TrianglePacking,
    pub hitting: HittingSet,
    pub packing_bound: i64,
    pub hitting_bound: i64,
    pub ratio_ok: bool,
    #[serde(default)]
    pub flags: Vec<String>,
}

impl ConstructionReport {
    pub(crate) fn new(
        bounds: CaseBounds,
        packing: TrianglePacking,
        hitting: HittingSet,
        flags: Vec<String>,
    ) -> Self {
        let ratio_ok = hitting.len() <= 2 * packing.len();
        ConstructionReport {
            case_label: bounds.label,
            packing,
            hitting,
            packing_bound: bounds.packing_bound,
            hitting_bound: bounds.hitting_bound,
            ratio_ok,
            flags,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Packing,
    Hitting,
    Ratio,
    Bounds,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Check::Packing => "(i) packing validity",
            Check::Hitting => "(ii) hitting validity",
            Check::Ratio => "(iii) |hitting| <= 2|packing|",
            Check::Bounds => "(iv) declared bounds",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationOutcome {
    pub passed: bool,
    pub failed_check: Option<Check>,
    pub detail: Option<String>,
}

impl VerificationOutcome {
    fn pass() -> Self {
        VerificationOutcome {
            passed: true,
            failed_check: None,
            detail: None,
        }
    }

    fn fail(check: Check, detail: String) -> Self {
        VerificationOutcome {
            passed: false,
            failed_check: Some(check),
            detail: Some(detail),
        }
    }
}

/// Checks a report against `g` and stops at the first violated check.
pub fn verify_certificates(g: &Graph, report: &ConstructionReport) -> VerificationOutcome {
    if let Err(e) = report.packing.check(g) {
        return VerificationOutcome::fail(Check::Packing, e);
    }
    if let Err(e) = report.hitting.check(g) {
        return VerificationOutcome::fail(Check::Hitting, e);
    }
    let (p, h) = (report.packing.len(), report.hitting.len());
    if h > 2 * p {
        return VerificationOutcome::fail(
            Check::Ratio,
            format!("hitting of size {h} exceeds twice the packing size {p}"),
        );
    }
    let (pb, hb) = (report.packing_bound, report.hitting_bound);
    if (p as i64) < pb {
        return VerificationOutcome::fail(
            Check::Bounds,
            format!("packing of size {p} is below its bound {pb}"),
        );
    }
    if (h as i64) > hb {
        return VerificationOutcome::fail(
            Check::Bounds,
            format!("hitting of size {h} is above its bound {hb}"),
        );
    }
    if hb > 2 * pb {
        return VerificationOutcome::fail(
            Check::Bounds,
            format!("hitting bound {hb} exceeds twice the packing bound {pb}"),
        );
    }
    VerificationOutcome::pass()
}

pub(crate) fn c2(n: i64) -> i64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

/// All pairs inside `vs`.
pub(crate) fn clique_edges(vs: &[usize]) -> impl Iterator<Item = Edge> + '_ {
    vs.iter()
        .enumerate()
        .flat_map(move |(i, &a)| vs[i + 1..].iter().map(move |&b| Edge::of(a, b)))
}

/// Edges of `g` with one end in `a` and the other in `b`.
pub(crate) fn cross_edges(g: &Graph, a: &[usize], b: &[usize]) -> EdgeSet {
    a.iter()
        .flat_map(|&x| {
            b.iter()
                .filter(move |&&y| g.has_edge(x, y))
                .map(move |&y| Edge::of(x, y))
        })
        .collect()
}
