//! Certified extraction of large cliques or independent sets from graphs
//! with at least `(1 − 1/k)·C(n,2)` edges, or equivalently from
//! 2-colorings of `K_n` in which one color covers less than a `1/k`
//! fraction of the pairs.
//!
//! The guaranteed size is `C·k·log₂n / log₂k` for `0 < C ≤ 0.01`,
//! `2 ≤ k ≤ n/(3C)`. Every witness is returned as an explicit vertex set
//! that [`graph_core::verify_witness`] can check independently.

pub mod bounds;
pub mod cli;
pub mod extractor;
pub mod generators;
pub mod graph_core;
pub mod oracle;

pub use graph_core::{Graph, HomogeneousWitness, TheoremParams, TwoColoring, WitnessKind};
