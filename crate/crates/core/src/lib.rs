//! Reconstruction of labeled graphs from their closed-neighborhood families
//! and from their digital convexities, with an exhaustive miner for
//! collision pairs among small labeled graphs.

pub mod cli;
pub mod convexity;
pub mod error;
pub mod families;
pub mod formats;
pub mod graph;
pub mod miner;
pub mod permutation;
pub mod reconstruct;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use families::{NeighborhoodMultiset, SetFamily};
pub use graph::Graph;
pub use permutation::PermutationWitness;
pub use reconstruct::{ReconstructionResult, SearchMode, SearchOptions, Verdict};
pub use vertex_set::VertexSet;
