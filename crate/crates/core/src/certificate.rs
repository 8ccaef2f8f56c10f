//! Packing and hitting certificates and their validity checks.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::graph::{Edge, EdgeSet, Graph, Triangle};

/// Pairwise edge-disjoint triangles of some host graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TrianglePacking(Vec<Triangle>);

impl TrianglePacking {
    pub fn new(triangles: Vec<Triangle>) -> Self {
        TrianglePacking(triangles)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Triangle> {
        self.0
    }

    /// Edges covered by the packing. Shared edges appear once.
    pub fn covered_edges(&self) -> EdgeSet {
        self.0.iter().flat_map(|t| t.edges()).collect()
    }

    /// Checks that every triangle lives in `g` and no edge is used twice.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        let mut used = BTreeSet::new();
        for t in &self.0 {
            if t.vertices().iter().any(|&v| v >= g.n()) {
                return Err(format!("triangle {t} has a vertex outside the graph"));
            }
            for e in t.edges() {
                if !g.contains_edge(&e) {
                    return Err(format!("triangle {t} uses non-edge {e}"));
                }
                if !used.insert(e) {
                    return Err(format!("edge {e} is used by more than one triangle"));
                }
            }
        }
        Ok(())
    }
}

impl From<Vec<Triangle>> for TrianglePacking {
    fn from(v: Vec<Triangle>) -> Self {
        TrianglePacking(v)
    }
}

/// An edge set meeting every triangle of some host graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HittingSet(EdgeSet);

impl HittingSet {
    pub fn new(edges: EdgeSet) -> Self {
        HittingSet(edges)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.0
    }

    pub fn into_inner(self) -> EdgeSet {
        self.0
    }

    /// Checks that every edge is in `g` and that deleting them leaves `g`
    /// triangle-free.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        let rest = g.remove_edges(&self.0).map_err(|e| e.to_string())?;
        match rest.triangles().first() {
            None => Ok(()),
            Some(t) => Err(format!("triangle {t} survives the hitting set")),
        }
    }
}

impl From<EdgeSet> for HittingSet {
    fn from(e: EdgeSet) -> Self {
        HittingSet(e)
    }
}

impl FromIterator<Edge> for HittingSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        HittingSet(iter.into_iter().collect())
    }
}
