//! Triangle packings and triangle hitting sets on threshold, co-chain and
//! complete graphs, with certificates and an exact branch-and-bound oracle.

pub mod certificate;
pub mod classes;
pub mod construct;
pub mod decomp;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod sweep;

pub use certificate::{HittingSet, TrianglePacking};
pub use error::{Error, Result};
pub use graph::{Edge, EdgeSet, Graph, Triangle};
