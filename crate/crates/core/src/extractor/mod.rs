//! Extraction of a certified homogeneous set of size at least
//! `C·k·log n / log k` from a graph with at least `(1 − 1/k)·C(n,2)` edges.
//!
//! Three regimes, chosen by [`classify_case`]:
//!
//! * `k ≤ 100`: the Ramsey bound `R(s, s) ≤ C(2s−2, s−1)` is below `n` for
//!   `s = ⌈target⌉`, so the Erdős–Szekeres recursion finds the set directly.
//! * `k ≥ √n`: the target is at most `2Ck`, and Turán's bound shows a clique
//!   of that order exists; greedy finds it, exact search is the fallback.
//! * otherwise: low-degree vertices are discarded and a clique `A` is grown
//!   one vertex at a time. Each round groups the remaining vertices by which
//!   few vertices of `A` they miss, recurses inside the largest group, and
//!   either returns a large independent set or swaps the missed part of `A`
//!   for a strictly larger clique from the group.

mod middle;
mod recursion;

use std::fmt;

use crate::bounds::{
    case2_clique_order, classify_case, es_bound, min_edges, required_size, target_size,
    turan_max_edges, CaseLabel,
};
use crate::graph_core::{
    pair_count, verify_witness, Graph, HomogeneousWitness, TheoremParams, WitnessCase, WitnessKind,
};
use crate::oracle::{self, Budget, OracleError};

pub use middle::{extract_case3, group_by_missing_subset, MissingSubsetGroups};
pub use recursion::{es_extract, greedy_clique};

use recursion::{es_extract_within, greedy_clique_capped};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Lt,
    Le,
    Ge,
    Gt,
}

impl Relation {
    fn holds(self, lhs: f64, rhs: f64) -> bool {
        match self {
            Relation::Lt => lhs < rhs,
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Gt => lhs > rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Gt => ">",
        }
    }
}

/// One inequality evaluated during extraction.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckRecord {
    pub name: &'static str,
    pub observed: f64,
    pub relation: Relation,
    pub bound: f64,
    pub holds: bool,
    /// Case-3 loop iteration, when the check belongs to one.
    pub iteration: Option<usize>,
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {} {}",
            self.name,
            self.observed,
            self.relation.symbol(),
            self.bound,
            if self.holds { "ok" } else { "FAILED" }
        )?;
        if let Some(i) = self.iteration {
            write!(f, " iter={i}")?;
        }
        Ok(())
    }
}

/// Record of what an extraction did. Vertex indices refer to the input graph.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtractionTrace {
    pub case_used: CaseLabel,
    /// Low-degree vertices discarded before the clique growth (case 3).
    pub w_removed: Vec<usize>,
    /// `(iteration, |A|)`, starting with the initial clique at iteration 0.
    pub clique_history: Vec<(usize, usize)>,
    /// Part of `A` missed by the chosen group in the last iteration.
    pub a_prime: Vec<usize>,
    pub b_prime_size: usize,
    pub es_calls: usize,
    pub greedy_used: bool,
    pub oracle_fallback: bool,
    pub assertions_checked: Vec<CheckRecord>,
}

impl ExtractionTrace {
    fn new(case_used: CaseLabel) -> Self {
        ExtractionTrace {
            case_used,
            w_removed: Vec::new(),
            clique_history: Vec::new(),
            a_prime: Vec::new(),
            b_prime_size: 0,
            es_calls: 0,
            greedy_used: false,
            oracle_fallback: false,
            assertions_checked: Vec::new(),
        }
    }

    /// Records the check and fails with [`ExtractError::InvariantBreach`]
    /// when it does not hold.
    fn require(
        &mut self,
        name: &'static str,
        observed: f64,
        relation: Relation,
        bound: f64,
        iteration: Option<usize>,
    ) -> Result<(), ExtractError> {
        let holds = relation.holds(observed, bound);
        let record = CheckRecord { name, observed, relation, bound, holds, iteration };
        self.assertions_checked.push(record.clone());
        if holds {
            Ok(())
        } else {
            Err(ExtractError::InvariantBreach {
                check: name.to_string(),
                detail: record.to_string(),
                trace: Some(Box::new(self.clone())),
            })
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ExtractError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    /// A check that cannot fail on valid input did fail.
    #[error("invariant breach in {check}: {detail}")]
    InvariantBreach { check: String, detail: String, trace: Option<Box<ExtractionTrace>> },
    #[error("oracle budget exceeded after finding a clique of size {best_size}")]
    BudgetExceeded { best_size: usize, trace: Box<ExtractionTrace> },
}

impl ExtractError {
    pub(crate) fn breach(check: &str, detail: String) -> Self {
        ExtractError::InvariantBreach { check: check.to_string(), detail, trace: None }
    }
}

#[derive(Clone, Debug)]
pub struct ExtractOptions {
    /// Starting clique for the middle-range loop, in input-graph indices.
    /// Ignored by the other cases.
    pub initial_clique: Option<Vec<usize>>,
    /// Budget for the exact-search fallback of the large-`k` case.
    pub budget: Budget,
    /// Try the greedy clique before exact search in the large-`k` case.
    pub greedy_first: bool,
}

impl Default for ExtractOptions {
    fn default() -> Self {
        ExtractOptions { initial_clique: None, budget: Budget::default(), greedy_first: true }
    }
}

pub type Extraction = (HomogeneousWitness, ExtractionTrace);

/// Dispatches on the parameter regime and returns a witness that passes
/// [`verify_witness`].
pub fn extract(g: &Graph, p: &TheoremParams) -> Result<Extraction, ExtractError> {
    extract_with(g, p, &ExtractOptions::default())
}

pub fn extract_with(g: &Graph, p: &TheoremParams, opts: &ExtractOptions) -> Result<Extraction, ExtractError> {
    check_density(g, p)?;
    let (witness, mut trace) = match classify_case(p) {
        CaseLabel::Case1 => extract_case1(g, p)?,
        CaseLabel::Case2 => extract_case2_with(g, p, opts)?,
        CaseLabel::Case3 => extract_case3(g, p, opts.initial_clique.as_deref())?,
    };
    let ok = verify_witness(g, &witness, p).unwrap_or(false);
    trace.require("witness_verifies", f64::from(u8::from(ok)), Relation::Ge, 1.0, None)?;
    Ok((witness, trace))
}

/// Graph size matches the params and `|E| ≥ (1 − 1/k)·C(n,2)`.
pub(crate) fn check_density(g: &Graph, p: &TheoremParams) -> Result<(), ExtractError> {
    if g.n() != p.n() {
        return Err(ExtractError::PreconditionViolated(format!(
            "params are for n = {} but the graph has {} vertices",
            p.n(),
            g.n()
        )));
    }
    let floor = min_edges(p.n(), p.k());
    if g.edge_count() < floor {
        return Err(ExtractError::PreconditionViolated(format!(
            "graph has {} edges; at least {floor} = ⌈(1 − 1/{})·{}⌉ are required",
            g.edge_count(),
            p.k(),
            pair_count(p.n())
        )));
    }
    Ok(())
}

/// Small `k`: run the recursion with `s = t = ⌈target⌉`.
pub fn extract_case1(g: &Graph, p: &TheoremParams) -> Result<Extraction, ExtractError> {
    check_density(g, p)?;
    if p.k() > crate::bounds::SMALL_K_LIMIT {
        return Err(ExtractError::PreconditionViolated(format!("k = {} exceeds 100", p.k())));
    }
    let mut trace = ExtractionTrace::new(CaseLabel::Case1);
    let size = required_size(p);
    let bound = es_bound(size as u64, size as u64);
    let bound_f = crate::bounds::saturating_u64(&bound) as f64;
    trace.require("small_k_ramsey_bound_below_n", p.n() as f64, Relation::Ge, bound_f, None)?;
    trace.require(
        "small_k_four_pow_target_below_n",
        4f64.powf(target_size(p)),
        Relation::Lt,
        p.n() as f64,
        None,
    )?;
    trace.es_calls += 1;
    let (kind, vertices) = es_extract_within(g, crate::graph_core::BitSet::full(g.n()), size, size)?;
    Ok((HomogeneousWitness::new(kind, vertices, WitnessCase::Case1), trace))
}

/// Large `k`: a clique of `⌈target⌉` vertices exists by Turán's bound.
pub fn extract_case2(g: &Graph, p: &TheoremParams) -> Result<Extraction, ExtractError> {
    extract_case2_with(g, p, &ExtractOptions::default())
}

pub fn extract_case2_with(g: &Graph, p: &TheoremParams, opts: &ExtractOptions) -> Result<Extraction, ExtractError> {
    check_density(g, p)?;
    let n = p.n() as f64;
    if p.k() < n.sqrt() {
        return Err(ExtractError::PreconditionViolated(format!("k = {} is below √n = {}", p.k(), n.sqrt())));
    }
    let mut trace = ExtractionTrace::new(CaseLabel::Case2);
    let (c, k) = (p.c(), p.k());
    let m = required_size(p);
    let r = case2_clique_order(p);
    trace.require("large_k_target_at_most_2ck", target_size(p), Relation::Le, 2.0 * c * k, None)?;
    if r >= 2 {
        let cap = turan_max_edges(p.n(), r).expect("r >= 2");
        let floor = (1.0 - 1.0 / k) * pair_count(p.n()) as f64;
        // The chain: Turán cap < (1 − 1/(2Ck))·n²/2 < floor − slack < floor.
        let slack = (1.0 - 2.0 * c) / (2.0 * c * k) * n * n / 2.0 - n / 2.0;
        trace.require("turan_cap_below_half_density", cap, Relation::Lt, (1.0 - 1.0 / (2.0 * c * k)) * n * n / 2.0, None)?;
        trace.require("turan_slack_positive", slack, Relation::Gt, 0.0, None)?;
        trace.require("turan_cap_below_density_floor", cap, Relation::Lt, floor, None)?;
        trace.require("edges_exceed_turan_cap", g.edge_count() as f64, Relation::Gt, cap, None)?;
    }

    if opts.greedy_first {
        trace.greedy_used = true;
        let greedy = greedy_clique_capped(g, m);
        if greedy.len() >= m {
            return Ok((HomogeneousWitness::new(WitnessKind::Clique, greedy, WitnessCase::Case2), trace));
        }
    }
    trace.oracle_fallback = true;
    match oracle::max_clique_with_budget(g, Some(m), opts.budget) {
        Ok(res) => {
            trace.require("fallback_clique_reaches_target", res.best_size as f64, Relation::Ge, m as f64, None)?;
            let mut clique = res.witness;
            clique.truncate(m);
            Ok((HomogeneousWitness::new(WitnessKind::Clique, clique, WitnessCase::Case2), trace))
        }
        Err(OracleError::BudgetExceeded { best, .. }) => {
            Err(ExtractError::BudgetExceeded { best_size: best.best_size, trace: Box::new(trace) })
        }
        Err(e @ OracleError::TooLarge { .. }) => Err(ExtractError::breach("oracle_fallback", e.to_string())),
    }
}
