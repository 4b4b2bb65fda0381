//! Vertex-disjoint cycle packing.
//!
//! For a simple graph `G` and an integer `k`, the crate either constructs
//! `k` vertex-disjoint cycles or produces a certificate that can be checked
//! independently: a violated degree or order hypothesis, an independent set
//! that is too large, or one of the known exceptional graphs.

pub mod budget;
pub mod characterizer;
pub mod equitable;
pub mod graph;
pub mod packer;
pub mod verifier;

pub use budget::{BudgetExceeded, Meter, SearchBudget};
pub use graph::{Graph, GraphError, VertexSet};
