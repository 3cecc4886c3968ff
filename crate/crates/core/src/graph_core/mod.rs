//! Graphs, two-colorings of `K_n`, homogeneity checks and witness
//! verification.
//!
//! Vertices are 0-indexed. Adjacency is one bit row per vertex, so degree
//! and common-neighbourhood queries are word-parallel.

mod bitset;
mod coloring;
mod graph;
mod witness;

pub use bitset::{words_for, BitSet};
pub use coloring::{Epsilon, TwoColoring, REAL_EPS_TOLERANCE};
pub use graph::{pair_count, Graph, Homogeneity};
pub use witness::{
    verify_witness, HomogeneousWitness, TheoremParams, WitnessCase, WitnessKind, TARGET_TOLERANCE,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GraphError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
