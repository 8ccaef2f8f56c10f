//! Graph classes the constructions run on.

mod cochain;
mod threshold;

pub use cochain::{
    cochain_from_profile, compute_cochain_x, format_profile, monotone_profiles, parse_profile,
    recognize_cochain, sample_cochain, sample_profile, CoChainRepr, CoChainX,
};
pub use threshold::{
    compute_threshold_x, creation_sequences, enumerate_threshold, normalize_threshold,
    recognize_threshold, threshold_from_creation_sequence, ThresholdRepr,
};

/// A set of vertices the constructions pivot on.
///
/// For threshold graphs `start` is the position of `u_r` in the independent
/// order (0-based); co-chain sets carry no index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XSet {
    members: Vec<usize>,
    start: Option<usize>,
}

impl XSet {
    pub(crate) fn new(members: Vec<usize>, start: Option<usize>) -> Self {
        XSet { members, start }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(&v)
    }

    pub fn start(&self) -> Option<usize> {
        self.start
    }
}
