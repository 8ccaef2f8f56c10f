//! Packing building blocks: matching decompositions of cliques, packings of
//! complete split graphs, and near-optimal packings and hittings of cliques.

mod clique;
mod matching;
mod split;
mod sts;

pub use clique::{
    clique_hitting, clique_leave_size, max_clique_packing, max_clique_packing_with,
    CliquePackingOptions, CliquePackingResult, DEFAULT_EXACT_CAP,
};
pub use matching::{clique_matchings, MatchingDecomposition};
pub use split::{
    cor23_size, pack_clique_against_is, pack_edges_with, pack_split, split_packing, LeftoverKind,
    SplitChoice, SplitPackingResult,
};
pub use sts::steiner_triple_system;
