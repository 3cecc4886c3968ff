//! Seeded instance generators and the local-search tightness probe.
//!
//! All randomness comes from ChaCha8 seeded through `seed_from_u64`, so a
//! `(spec, seed)` pair yields the same instance on every platform.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph_core::{pair_count, Epsilon, Graph, GraphError, TwoColoring};
use crate::oracle::{self, Budget, OracleError};

/// The generator used for every seeded routine in this crate.
pub type SeededRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GenError {
    #[error(transparent)]
    InvalidInput(#[from] GraphError),
    #[error("oracle budget exceeded during tightness search (best hom so far: {best_hom})")]
    BudgetExceeded { best: Box<Graph>, best_hom: usize },
}

/// What to generate.
#[derive(Clone, Debug, PartialEq)]
pub enum GenKind {
    RandomExact { m: usize },
    TuranGraph { r: usize },
    UnbalancedColoring { eps: Epsilon },
    /// Hill-climb from a random `m`-edge graph keeping at least `m` edges.
    TightnessSearch { m: usize, iterations: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenSpec {
    pub n: usize,
    pub seed: u64,
    pub kind: GenKind,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Generated {
    Graph(Graph),
    Coloring(TwoColoring),
}

pub fn generate(spec: &GenSpec) -> Result<Generated, GenError> {
    Ok(match spec.kind {
        GenKind::RandomExact { m } => Generated::Graph(random_graph_exact_edges(spec.n, m, spec.seed)?),
        GenKind::TuranGraph { r } => Generated::Graph(turan_graph(spec.n, r)?),
        GenKind::UnbalancedColoring { eps } => {
            Generated::Coloring(random_unbalanced_coloring(spec.n, eps, spec.seed)?)
        }
        GenKind::TightnessSearch { m, iterations } => {
            let start = random_graph_exact_edges(spec.n, m, spec.seed)?;
            let (g, _) = tightness_search(&start, m, iterations, spec.seed, &TightnessConfig::default())?;
            Generated::Graph(g)
        }
    })
}

/// Uniform random pair `u ≠ v`, returned with `u < v`.
fn random_pair(rng: &mut SeededRng, n: usize) -> (usize, usize) {
    let u = rng.gen_range(0..n);
    let mut v = rng.gen_range(0..n - 1);
    if v >= u {
        v += 1;
    }
    (u.min(v), u.max(v))
}

/// Uniformly random graph with exactly `m` edges.
///
/// Above half density the `C(n,2) − m` non-edges are sampled instead and
/// removed from `K_n`.
pub fn random_graph_exact_edges(n: usize, m: usize, seed: u64) -> Result<Graph, GraphError> {
    let total = pair_count(n);
    if m > total {
        return Err(GraphError::InvalidInput(format!(
            "{m} edges requested but K_{n} has only {total}"
        )));
    }
    let mut rng = rng_from_seed(seed);
    let sample_complement = m > total / 2;
    let (mut g, target) = if sample_complement {
        (Graph::complete(n), total - m)
    } else {
        (Graph::empty(n), m)
    };
    let mut placed = 0;
    while placed < target {
        let (u, v) = random_pair(&mut rng, n);
        if g.set_edge(u, v, !sample_complement) {
            placed += 1;
        }
    }
    debug_assert_eq!(g.edge_count(), m);
    Ok(g)
}

/// Complete `r`-partite graph on `n` vertices with balanced, contiguous
/// parts; the first `n mod r` parts have size `⌈n/r⌉`.
pub fn turan_graph(n: usize, r: usize) -> Result<Graph, GraphError> {
    if r < 1 || r > n {
        return Err(GraphError::InvalidInput(format!("Turán graph needs 1 <= r <= n, got r = {r}, n = {n}")));
    }
    let parts = turan_part_sizes(n, r);
    let mut g = Graph::complete(n);
    let mut start = 0;
    for &size in &parts {
        for u in start..start + size {
            for v in u + 1..start + size {
                g.set_edge(u, v, false);
            }
        }
        start += size;
    }
    Ok(g)
}

pub fn turan_part_sizes(n: usize, r: usize) -> Vec<usize> {
    (0..r).map(|i| n / r + usize::from(i < n % r)).collect()
}

/// A coloring whose blue (minority) class has exactly
/// `max(0, ⌈ε·C(n,2)⌉ − 1)` uniformly chosen edges, so it is not
/// ε-balanced.
pub fn random_unbalanced_coloring(n: usize, eps: Epsilon, seed: u64) -> Result<TwoColoring, GraphError> {
    eps.validate()?;
    if n < 2 {
        return Err(GraphError::InvalidInput(format!("coloring needs n >= 2, got {n}")));
    }
    let total = pair_count(n);
    let blue = eps.ceil_fraction_of(total).saturating_sub(1);
    let red = random_graph_exact_edges(n, total - blue, seed)?;
    Ok(TwoColoring::from_red_graph(red))
}

#[derive(Clone, Copy, Debug)]
pub struct TightnessConfig {
    /// Largest vertex count accepted (the objective runs two exact oracles).
    pub max_n: usize,
    /// Consecutive non-improving accepted moves before sideways moves stop.
    pub sideways_limit: usize,
    pub budget: Budget,
}

impl Default for TightnessConfig {
    fn default() -> Self {
        TightnessConfig { max_n: 40, sideways_limit: 50, budget: Budget::default() }
    }
}

/// `max(ω(G), α(G))`.
pub fn homogeneous_number(g: &Graph, budget: Budget) -> Result<usize, OracleError> {
    let clique = oracle::max_clique_with_budget(g, None, budget)?.best_size;
    let independent = oracle::max_independent_set_with_budget(g, None, budget)?.best_size;
    Ok(clique.max(independent))
}

#[derive(Clone, Copy)]
enum Move {
    Insert,
    Delete,
    Swap,
}

/// Hill-climbing over single-edge insert/delete/swap moves that keep at
/// least `min_edges` edges, minimising `max(ω, α)`.
///
/// Moves that do not worsen the objective are accepted; once
/// `sideways_limit` consecutive accepted moves fail to improve it, only
/// strict improvements are taken until the next one.
pub fn tightness_search(
    start: &Graph,
    min_edges: usize,
    iterations: usize,
    seed: u64,
    config: &TightnessConfig,
) -> Result<(Graph, usize), GenError> {
    let n = start.n();
    if start.edge_count() < min_edges {
        return Err(GraphError::InvalidInput(format!(
            "start graph has {} edges, below the floor {min_edges}",
            start.edge_count()
        ))
        .into());
    }
    if n > config.max_n {
        return Err(GraphError::InvalidInput(format!(
            "tightness search is limited to n <= {}, got {n}",
            config.max_n
        ))
        .into());
    }
    let hom = |g: &Graph, best: &Graph, best_hom: usize| {
        homogeneous_number(g, config.budget).map_err(|_| GenError::BudgetExceeded {
            best: Box::new(best.clone()),
            best_hom,
        })
    };
    let start_hom = hom(start, start, usize::MAX)?;
    let mut best = start.clone();
    let mut best_hom = start_hom;
    let mut current = start.clone();
    let mut current_hom = start_hom;
    let mut stale = 0usize;
    let mut rng = rng_from_seed(seed);
    let total = pair_count(n);

    for _ in 0..iterations {
        let can_insert = current.edge_count() < total;
        let can_delete = current.edge_count() > min_edges;
        let can_swap = current.edge_count() > 0 && can_insert;
        let moves: Vec<Move> = [(can_insert, Move::Insert), (can_delete, Move::Delete), (can_swap, Move::Swap)]
            .into_iter()
            .filter_map(|(ok, m)| ok.then_some(m))
            .collect();
        if moves.is_empty() {
            break;
        }
        let mv = moves[rng.gen_range(0..moves.len())];
        let mut candidate = current.clone();
        match mv {
            Move::Insert => flip_random(&mut candidate, &mut rng, true),
            Move::Delete => flip_random(&mut candidate, &mut rng, false),
            Move::Swap => {
                flip_random(&mut candidate, &mut rng, false);
                flip_random(&mut candidate, &mut rng, true);
            }
        }
        debug_assert!(candidate.edge_count() >= min_edges);
        let h = hom(&candidate, &best, best_hom)?;
        if h < current_hom {
            current = candidate;
            current_hom = h;
            stale = 0;
        } else if h == current_hom && stale < config.sideways_limit {
            current = candidate;
            stale += 1;
        } else {
            continue;
        }
        if current_hom < best_hom {
            best = current.clone();
            best_hom = current_hom;
        }
    }
    Ok((best, best_hom))
}

/// Inserts (`present`) or deletes a uniformly random non-edge / edge.
fn flip_random(g: &mut Graph, rng: &mut SeededRng, present: bool) {
    let pool: Vec<(usize, usize)> = (0..g.n())
        .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
        .filter(|&(u, v)| g.has_edge(u, v) != present)
        .collect();
    if pool.is_empty() {
        return;
    }
    let (u, v) = pool[rng.gen_range(0..pool.len())];
    g.set_edge(u, v, present);
}
