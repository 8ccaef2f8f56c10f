//! Graph families, class dispatch and the per-graph sweep pipeline.

use std::fmt;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classes::{
    cochain_from_profile, creation_sequences, normalize_threshold, parse_profile,
    recognize_cochain, recognize_threshold, sample_profile, threshold_from_creation_sequence,
    CoChainRepr,
};
use crate::construct::{
    cochain_construct_with_budget, threshold_construct, verify_certificates, ConstructionReport,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{exact_mu_seeded, exact_tau_seeded, ratio_of, Ratio};

/// A generator spec such as `threshold-all:1..10` or `cochain-rand:4:100`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Threshold(String),
    ThresholdAll(RangeInclusive<usize>),
    Cochain(PathBuf),
    CochainRand { ell: usize, count: usize },
    Clique(RangeInclusive<usize>),
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| Error::input(format!("expected a count or range a..b, got `{s}`")))
    };
    match s.split_once("..") {
        Some((a, b)) => Ok(num(a)?..=num(b)?),
        None => {
            let n = num(s)?;
            Ok(n..=n)
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::input(format!("family `{s}` has no `:`")))?;
        match kind {
            "threshold" => {
                if let Some(c) = arg.chars().find(|&c| c != '0' && c != '1') {
                    return Err(Error::input(format!(
                        "creation sequence has character {c:?}"
                    )));
                }
                Ok(Family::Threshold(arg.to_string()))
            }
            "threshold-all" => Ok(Family::ThresholdAll(parse_range(arg)?)),
            "cochain" if !arg.is_empty() => Ok(Family::Cochain(PathBuf::from(arg))),
            "cochain-rand" => {
                let (ell, count) = arg
                    .split_once(':')
                    .ok_or_else(|| Error::input("expected cochain-rand:<ell>:<count>"))?;
                let num = |t: &str| {
                    t.parse::<usize>()
                        .map_err(|_| Error::input(format!("bad number `{t}` in `{s}`")))
                };
                Ok(Family::CochainRand {
                    ell: num(ell)?,
                    count: num(count)?,
                })
            }
            "clique" => Ok(Family::Clique(parse_range(arg)?)),
            _ => Err(Error::input(format!("unknown family `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphClass {
    Threshold,
    Cochain,
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphClass::Threshold => "threshold",
            GraphClass::Cochain => "cochain",
        })
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "threshold" => Ok(GraphClass::Threshold),
            "cochain" | "co-chain" => Ok(GraphClass::Cochain),
            _ => Err(Error::input(format!("unknown class `{s}`"))),
        }
    }
}

/// One generated graph. Co-chain families keep the representation they were
/// built from.
#[derive(Clone, Debug)]
pub struct Instance {
    pub id: String,
    pub descriptor: String,
    pub graph: Graph,
    pub cochain: Option<CoChainRepr>,
}

/// Materializes a family. Random families draw from one stream seeded by
/// `seed`, so the output depends only on the spec and the seed.
pub fn generate(family: &Family, seed: u64) -> Result<Vec<Instance>> {
    let threshold = |bits: &str| -> Result<Instance> {
        let (graph, _) = threshold_from_creation_sequence(bits)?;
        Ok(Instance {
            id: format!("thr{:02}_{bits}", bits.len() + 1),
            descriptor: format!("threshold:{bits}"),
            graph,
            cochain: None,
        })
    };
    let cochain = |id: String, profile: &[usize]| -> Result<Instance> {
        let (graph, r) = cochain_from_profile(profile)?;
        let body: Vec<String> = profile.iter().map(|p| p.to_string()).collect();
        Ok(Instance {
            id,
            descriptor: format!("cochain:{}", body.join(",")),
            graph,
            cochain: Some(r),
        })
    };
    match family {
        Family::Threshold(bits) => Ok(vec![threshold(bits)?]),
        Family::ThresholdAll(range) => range
            .clone()
            .filter(|&n| n >= 1)
            .flat_map(creation_sequences)
            .map(|bits| threshold(&bits))
            .collect(),
        Family::Cochain(path) => {
            let profile = parse_profile(&std::fs::read_to_string(path)?)?;
            let stem = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            Ok(vec![cochain(format!("cc_{stem}"), &profile)?])
        }
        Family::CochainRand { ell, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..*count)
                .map(|i| {
                    let profile = sample_profile(*ell, &mut rng);
                    cochain(format!("cc{ell}_s{seed}_{i:05}"), &profile)
                })
                .collect()
        }
        Family::Clique(range) => range
            .clone()
            .map(|n| {
                Ok(Instance {
                    id: format!("k{n:04}"),
                    descriptor: format!("clique:{n}"),
                    graph: Graph::complete(n)?,
                    cochain: None,
                })
            })
            .collect(),
    }
}

/// Recognizes the class of `g` (threshold first unless `class` forces one)
/// and runs the matching construction. A co-chain `hint` is used in place of
/// recognition when given.
pub fn construct(
    g: &Graph,
    class: Option<GraphClass>,
    hint: Option<&CoChainRepr>,
    budget: u64,
) -> Result<(GraphClass, ConstructionReport)> {
    let as_threshold = || -> Result<(GraphClass, ConstructionReport)> {
        let r = normalize_threshold(&recognize_threshold(g)?);
        Ok((GraphClass::Threshold, threshold_construct(&r)?))
    };
    let as_cochain = || -> Result<(GraphClass, ConstructionReport)> {
        let r = match hint {
            Some(r) => r.clone(),
            None => recognize_cochain(g)?,
        };
        Ok((
            GraphClass::Cochain,
            cochain_construct_with_budget(&r, budget)?,
        ))
    };
    match class {
        Some(GraphClass::Threshold) => as_threshold(),
        Some(GraphClass::Cochain) => as_cochain(),
        None => match as_threshold() {
            Err(Error::NotInClass {
                witness, reason, ..
            }) => as_cochain().map_err(|e| match e {
                Error::NotInClass { reason: r2, .. } | Error::Precondition(r2) => {
                    Error::NotInClass {
                        class: "threshold or even balanced co-chain",
                        witness,
                        reason: format!("threshold: {reason}; co-chain: {r2}"),
                    }
                }
                e => e,
            }),
            other => other,
        },
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    /// Run the exact oracle on graphs with fewer vertices than this.
    pub exact_below: usize,
    pub budget: u64,
    /// Worker threads; `None` uses rayon's default.
    pub jobs: Option<usize>,
    pub class: Option<GraphClass>,
}

/// One CSV row. Optional fields are left empty when not computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepRow {
    pub graph_id: String,
    pub n: usize,
    pub class: String,
    pub case_label: String,
    pub pack_size: Option<usize>,
    pub hit_size: Option<usize>,
    pub mu: Option<usize>,
    pub tau: Option<usize>,
    pub exact: bool,
    pub ratio_num: Option<u64>,
    pub ratio_den: Option<u64>,
    pub pass: bool,
    #[serde(skip)]
    pub oracle_incomplete: bool,
    #[serde(skip)]
    pub detail: Option<String>,
}

/// Construction, certificate check and (optionally) exact oracle for one
/// graph.
pub fn sweep_row(inst: &Instance, opts: &SweepOptions) -> SweepRow {
    let g = &inst.graph;
    let mut row = SweepRow {
        graph_id: inst.id.clone(),
        n: g.n(),
        class: String::new(),
        case_label: String::new(),
        pack_size: None,
        hit_size: None,
        mu: None,
        tau: None,
        exact: false,
        ratio_num: None,
        ratio_den: None,
        pass: false,
        oracle_incomplete: false,
        detail: None,
    };
    let (class, report) = match construct(g, opts.class, inst.cochain.as_ref(), opts.budget) {
        Ok(x) => x,
        Err(e) => {
            row.class = "unrecognized".to_string();
            row.detail = Some(e.to_string());
            return row;
        }
    };
    row.class = class.to_string();
    row.case_label = report.case_label.to_string();
    let (pack, hit) = (report.packing.len(), report.hitting.len());
    row.pack_size = Some(pack);
    row.hit_size = Some(hit);
    let outcome = verify_certificates(g, &report);
    row.pass = outcome.passed;
    row.detail = outcome.detail;

    let mut ratio = match (hit, pack) {
        (0, _) => Some(Ratio::new(0, 1)),
        (_, 0) => None,
        (h, p) => Some(Ratio::new(h as u64, p as u64)),
    };
    if g.n() < opts.exact_below {
        let mu = exact_mu_seeded(g, opts.budget, Some(&report.packing));
        let tau = exact_tau_seeded(g, opts.budget, Some(&report.hitting));
        if mu.exact && tau.exact {
            row.exact = true;
            row.mu = Some(mu.value);
            row.tau = Some(tau.value);
            let sandwich = pack <= mu.value && hit >= tau.value && tau.value <= 2 * mu.value;
            row.pass &= sandwich;
            match ratio_of(tau.value, mu.value) {
                Ok(r) => ratio = Some(r),
                Err(e) => {
                    row.pass = false;
                    row.detail = Some(e.to_string());
                }
            }
        } else {
            row.oracle_incomplete = true;
        }
    }
    match ratio {
        Some(r) => {
            row.ratio_num = Some(r.num);
            row.ratio_den = Some(r.den);
        }
        None => {
            row.ratio_num = Some(hit as u64);
            row.ratio_den = Some(0);
        }
    }
    row
}

/// Rows for every instance, sorted by graph id.
pub fn sweep(instances: &[Instance], opts: &SweepOptions) -> Result<Vec<SweepRow>> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = opts.jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| Error::input(format!("cannot start worker pool: {e}")))?;
    let mut rows: Vec<SweepRow> =
        pool.install(|| instances.par_iter().map(|i| sweep_row(i, opts)).collect());
    rows.sort_by(|a, b| a.graph_id.cmp(&b.graph_id));
    Ok(rows)
}

const HEADER: [&str; 12] = [
    "graphId",
    "n",
    "class",
    "caseLabel",
    "packSize",
    "hitSize",
    "mu",
    "tau",
    "exact",
    "ratioNum",
    "ratioDen",
    "pass",
];

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    w.write_record(HEADER)?;
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}
