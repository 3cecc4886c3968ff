use std::fmt;

use super::graph::Graph;
use super::GraphError;
use crate::bounds::{self, CaseLabel};

/// Slack when comparing an integer witness size to the real-valued target.
pub const TARGET_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WitnessKind {
    Clique,
    IndependentSet,
}

impl WitnessKind {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessKind::Clique => "clique",
            WitnessKind::IndependentSet => "independent-set",
        }
    }
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which branch produced a witness. `Trivial` marks witnesses built outside
/// the three-case dispatch (direct recursion calls, files without provenance).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessCase {
    Case1,
    Case2,
    Case3,
    Trivial,
}

impl From<CaseLabel> for WitnessCase {
    fn from(c: CaseLabel) -> Self {
        match c {
            CaseLabel::Case1 => WitnessCase::Case1,
            CaseLabel::Case2 => WitnessCase::Case2,
            CaseLabel::Case3 => WitnessCase::Case3,
        }
    }
}

impl fmt::Display for WitnessCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessCase::Case1 => "case1",
            WitnessCase::Case2 => "case2",
            WitnessCase::Case3 => "case3",
            WitnessCase::Trivial => "trivial",
        })
    }
}

/// A clique or independent set claimed in some graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousWitness {
    pub kind: WitnessKind,
    /// Sorted, distinct.
    pub vertices: Vec<usize>,
    pub case_used: WitnessCase,
}

impl HomogeneousWitness {
    pub fn new(kind: WitnessKind, mut vertices: Vec<usize>, case_used: WitnessCase) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        HomogeneousWitness { kind, vertices, case_used }
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    /// Does the vertex set have the claimed kind in `g`? Out-of-range vertices
    /// make the claim false.
    pub fn holds_in(&self, g: &Graph) -> bool {
        match g.check_homogeneous(&self.vertices) {
            Ok(h) => match self.kind {
                WitnessKind::Clique => h.is_clique(),
                WitnessKind::IndependentSet => h.is_independent(),
            },
            Err(_) => false,
        }
    }
}

/// Validated `(n, k, C)`: `n ≥ 3`, `k ≥ 2`, `0 < C ≤ 0.01`, `k ≤ n/(3C)`.
/// Only [`bounds::validate_params`] builds one.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TheoremParams {
    pub(crate) n: usize,
    pub(crate) k: f64,
    pub(crate) c: f64,
}

impl TheoremParams {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn c(&self) -> f64 {
        self.c
    }
}

/// Checks that `w` is homogeneous of its claimed kind in `g` and reaches the
/// target size for `p` (within [`TARGET_TOLERANCE`]).
pub fn verify_witness(g: &Graph, w: &HomogeneousWitness, p: &TheoremParams) -> Result<bool, GraphError> {
    if g.n() != p.n {
        return Err(GraphError::InvalidInput(format!(
            "params are for n = {} but the graph has {} vertices",
            p.n,
            g.n()
        )));
    }
    let distinct = w.vertices.windows(2).all(|p| p[0] < p[1]);
    Ok(distinct
        && w.holds_in(g)
        && w.size() as f64 >= bounds::target_size(p) - TARGET_TOLERANCE)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::validate_params;

    #[test]
    fn verify_examples() {
        let p = validate_params(5, 2.0, 0.01).unwrap();
        let k5 = Graph::complete(5);
        let w = HomogeneousWitness::new(WitnessKind::Clique, vec![0, 1, 2], WitnessCase::Trivial);
        assert!(verify_witness(&k5, &w, &p).unwrap());

        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(!verify_witness(&c5, &w, &p).unwrap());

        let single = HomogeneousWitness::new(WitnessKind::Clique, vec![0], WitnessCase::Trivial);
        assert!(verify_witness(&k5, &single, &p).unwrap());

        let empty = HomogeneousWitness::new(WitnessKind::Clique, vec![], WitnessCase::Trivial);
        assert!(!verify_witness(&k5, &empty, &p).unwrap());

        let out = HomogeneousWitness::new(WitnessKind::Clique, vec![7], WitnessCase::Trivial);
        assert!(!verify_witness(&k5, &out, &p).unwrap());

        let unsorted = HomogeneousWitness {
            kind: WitnessKind::Clique,
            vertices: vec![1, 1],
            case_used: WitnessCase::Trivial,
        };
        assert!(!verify_witness(&k5, &unsorted, &p).unwrap());

        assert!(verify_witness(&Graph::complete(6), &w, &p).is_err());
    }

    #[test]
    fn size_below_target_fails() {
        // n = 1000, k = 200: target ≈ 2.61 needs three vertices.
        let p = validate_params(1000, 200.0, 0.01).unwrap();
        let g = Graph::empty(1000);
        let one = HomogeneousWitness::new(WitnessKind::IndependentSet, vec![5, 9], WitnessCase::Trivial);
        let two = HomogeneousWitness::new(WitnessKind::IndependentSet, vec![5, 9, 11], WitnessCase::Trivial);
        assert!(!verify_witness(&g, &one, &p).unwrap());
        assert!(verify_witness(&g, &two, &p).unwrap());
    }
}
