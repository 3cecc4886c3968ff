//! Exact ground truth: bitset branch-and-bound maximum clique, maximum
//! independent set through the complement, and exhaustive Ramsey checks
//! for very small `n`.

use std::time::{Duration, Instant};

use crate::graph_core::{pair_count, BitSet, Graph};

/// Default wall-clock budget per oracle call.
pub const DEFAULT_TIME_LIMIT: Duration = Duration::from_secs(30);

/// Default cap on `C(n,2)` for [`ramsey_check`]: all `2^21` graphs on 7
/// vertices.
pub const DEFAULT_RAMSEY_PAIR_LIMIT: usize = 21;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub best_size: usize,
    /// Sorted vertex set achieving `best_size`.
    pub witness: Vec<usize>,
    /// True iff the search proved `best_size` optimal.
    pub exhausted: bool,
    pub nodes_explored: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub time_limit: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { time_limit: Some(DEFAULT_TIME_LIMIT) }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { time_limit: None }
    }

    pub fn seconds(secs: f64) -> Self {
        Budget { time_limit: Some(Duration::from_secs_f64(secs)) }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error("oracle time budget of {limit:?} exceeded (best so far: {})", best.best_size)]
    BudgetExceeded { best: Box<OracleResult>, limit: Duration },
    #[error("exhaustive search over graphs on {n} vertices needs {pairs} pair bits; limit is {limit}")]
    TooLarge { n: usize, pairs: usize, limit: usize },
}

pub fn max_clique_exact(g: &Graph, stop_at: Option<usize>) -> Result<OracleResult, OracleError> {
    max_clique_with_budget(g, stop_at, Budget::default())
}

/// Branch and bound over bitset candidate sets with greedy-colouring upper
/// bounds. Vertices are searched in descending-degree order (ties by index).
///
/// With `stop_at = Some(x)` the search returns as soon as a clique of size
/// `≥ x` is found.
pub fn max_clique_with_budget(
    g: &Graph,
    stop_at: Option<usize>,
    budget: Budget,
) -> Result<OracleResult, OracleError> {
    let n = g.n();
    let degrees = g.degrees();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]).then(a.cmp(&b)));
    let mut position = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let adj: Vec<BitSet> = order
        .iter()
        .map(|&v| BitSet::from_indices(n, g.neighbor_iter(v).map(|u| position[u])))
        .collect();

    let mut search = CliqueSearch {
        adj,
        best: Vec::new(),
        nodes: 0,
        stop_at,
        started: Instant::now(),
        limit: budget.time_limit,
        stopped_early: false,
        timed_out: false,
    };
    if stop_at != Some(0) && n > 0 {
        let mut current = Vec::new();
        search.expand(BitSet::full(n), &mut current);
    } else {
        search.stopped_early = stop_at == Some(0);
    }

    let mut witness: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    witness.sort_unstable();
    let result = OracleResult {
        best_size: witness.len(),
        witness,
        exhausted: !search.stopped_early && !search.timed_out,
        nodes_explored: search.nodes,
    };
    if search.timed_out {
        return Err(OracleError::BudgetExceeded {
            best: Box::new(result),
            limit: budget.time_limit.unwrap_or_default(),
        });
    }
    Ok(result)
}

struct CliqueSearch {
    adj: Vec<BitSet>,
    best: Vec<usize>,
    nodes: u64,
    stop_at: Option<usize>,
    started: Instant,
    limit: Option<Duration>,
    stopped_early: bool,
    timed_out: bool,
}

impl CliqueSearch {
    fn halted(&self) -> bool {
        self.stopped_early || self.timed_out
    }

    /// Greedy sequential colouring of `cand`; returns vertices in ascending
    /// colour order alongside their colour numbers.
    fn colour_sort(&self, cand: &BitSet) -> (Vec<usize>, Vec<usize>) {
        let mut verts = Vec::with_capacity(cand.count());
        let mut colours = Vec::with_capacity(verts.capacity());
        let mut uncoloured = cand.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut class = uncoloured.clone();
            while let Some(v) = class.first() {
                class.remove(v);
                class.subtract_row(self.adj[v].words());
                uncoloured.remove(v);
                verts.push(v);
                colours.push(colour);
            }
        }
        (verts, colours)
    }

    fn expand(&mut self, mut cand: BitSet, current: &mut Vec<usize>) {
        self.nodes += 1;
        if self.nodes % 256 == 0 {
            if let Some(limit) = self.limit {
                if self.started.elapsed() > limit {
                    self.timed_out = true;
                    return;
                }
            }
        }
        let (verts, colours) = self.colour_sort(&cand);
        for i in (0..verts.len()).rev() {
            if current.len() + colours[i] <= self.best.len() {
                return;
            }
            let v = verts[i];
            current.push(v);
            let mut next = cand.clone();
            next.intersect_row(self.adj[v].words());
            if next.is_empty() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                    if self.stop_at.is_some_and(|x| self.best.len() >= x) {
                        self.stopped_early = true;
                    }
                }
            } else {
                self.expand(next, current);
            }
            current.pop();
            if self.halted() {
                return;
            }
            cand.remove(v);
        }
    }
}

pub fn max_independent_set_exact(
    g: &Graph,
    stop_at: Option<usize>,
) -> Result<OracleResult, OracleError> {
    max_independent_set_with_budget(g, stop_at, Budget::default())
}

/// Maximum clique of the complement.
pub fn max_independent_set_with_budget(
    g: &Graph,
    stop_at: Option<usize>,
    budget: Budget,
) -> Result<OracleResult, OracleError> {
    max_clique_with_budget(&g.complement(), stop_at, budget)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamseyOutcome {
    pub holds: bool,
    /// A graph with no `s`-clique and no `t`-independent set, when one exists.
    pub counterexample: Option<Graph>,
}

pub fn ramsey_check(n: usize, s: usize, t: usize) -> Result<RamseyOutcome, OracleError> {
    ramsey_check_with_limit(n, s, t, DEFAULT_RAMSEY_PAIR_LIMIT)
}

/// Decides whether every graph on `n` vertices has a clique of size `s` or
/// an independent set of size `t`, by enumerating all `2^C(n,2)` graphs.
///
/// The first counterexample in enumeration order (edge masks ascending,
/// pairs in lexicographic order) is returned.
pub fn ramsey_check_with_limit(
    n: usize,
    s: usize,
    t: usize,
    pair_limit: usize,
) -> Result<RamseyOutcome, OracleError> {
    let pairs = pair_count(n);
    if pairs > pair_limit || pairs >= 64 {
        return Err(OracleError::TooLarge { n, pairs, limit: pair_limit.min(63) });
    }
    let mut pair_index = vec![vec![0usize; n]; n];
    let mut idx = 0;
    for u in 0..n {
        for v in u + 1..n {
            pair_index[u][v] = idx;
            pair_index[v][u] = idx;
            idx += 1;
        }
    }
    let subset_masks = |size: usize| -> Vec<u64> {
        if size > n {
            return Vec::new();
        }
        (0u32..1 << n)
            .filter(|set| set.count_ones() as usize == size)
            .map(|set| {
                let members: Vec<usize> = (0..n).filter(|&v| set >> v & 1 == 1).collect();
                let mut mask = 0u64;
                for (i, &u) in members.iter().enumerate() {
                    for &v in &members[i + 1..] {
                        mask |= 1u64 << pair_index[u][v];
                    }
                }
                mask
            })
            .collect()
    };
    let clique_masks = subset_masks(s);
    let independent_masks = subset_masks(t);

    for graph in 0u64..1u64 << pairs {
        let has_clique = clique_masks.iter().any(|&m| m & !graph == 0);
        if has_clique {
            continue;
        }
        let has_independent = independent_masks.iter().any(|&m| m & graph == 0);
        if !has_independent {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| graph >> pair_index[u][v] & 1 == 1)
                .collect();
            let g = Graph::from_edges(n, &edges).expect("pairs are in range");
            return Ok(RamseyOutcome { holds: false, counterexample: Some(g) });
        }
    }
    Ok(RamseyOutcome { holds: true, counterexample: None })
}
