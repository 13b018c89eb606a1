//! Exact Grundy numbers and companion invariants for small graphs, the graph
//! families that attain the known bounds, forbidden-subgraph recognition,
//! and an exhaustive bound-verification harness.

pub mod coloring;
pub mod error;
pub mod families;
pub mod graph;
pub mod grundy;
pub mod invariants;
pub mod limits;
pub mod oracle;
pub mod recognition;
pub mod verify;

pub use coloring::Coloring;
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use grundy::{grundy_number, GrundyCertificate};
pub use invariants::InvariantReport;
