use num_bigint::BigUint;

use super::ExtractError;
use crate::bounds::{es_bound, es_bound_table};
use crate::graph_core::{BitSet, Graph, HomogeneousWitness, WitnessCase, WitnessKind};

/// Finds a clique of exactly `s` vertices or an independent set of exactly
/// `t` vertices in `g`, which must have at least `C(s+t−2, s−1)` vertices.
///
/// Follows the inductive proof of that bound: take the lowest-index vertex
/// `v`, keep its neighbours if there are at least `C(s+t−3, s−2)` of them
/// (clique side, `s` drops by one) and its non-neighbours otherwise
/// (independent side, `t` drops by one).
pub fn es_extract(g: &Graph, s: usize, t: usize) -> Result<HomogeneousWitness, ExtractError> {
    let (kind, vertices) = es_extract_within(g, BitSet::full(g.n()), s, t)?;
    Ok(HomogeneousWitness::new(kind, vertices, WitnessCase::Trivial))
}

/// [`es_extract`] restricted to the vertices in `cand`.
pub(crate) fn es_extract_within(
    g: &Graph,
    mut cand: BitSet,
    s: usize,
    t: usize,
) -> Result<(WitnessKind, Vec<usize>), ExtractError> {
    if s == 0 || t == 0 {
        return Err(ExtractError::PreconditionViolated(format!(
            "clique and independent-set sizes must be >= 1, got s = {s}, t = {t}"
        )));
    }
    let available = cand.count();
    // min(s, t) ≥ 2 forces the bound above max(s, t); skip the big binomial then.
    let too_large = s.min(t) >= 2 && s.max(t) > available;
    if too_large || BigUint::from(available) < es_bound(s as u64, t as u64) {
        return Err(ExtractError::PreconditionViolated(format!(
            "{available} vertices are fewer than the Ramsey bound C({}, {}) for s = {s}, t = {t}",
            s + t - 2,
            s - 1
        )));
    }

    let table = es_bound_table(s, t);
    let (mut s, mut t) = (s, t);
    let mut clique = Vec::new();
    let mut independent = Vec::new();
    loop {
        let v = cand.first().ok_or_else(|| ExtractError::breach(
            "es_nonempty_candidates",
            format!("candidate set emptied with s = {s}, t = {t}"),
        ))?;
        if s == 1 {
            clique.push(v);
            return Ok((WitnessKind::Clique, clique));
        }
        if t == 1 {
            independent.push(v);
            return Ok((WitnessKind::IndependentSet, independent));
        }
        cand.remove(v);
        let mut neighbours = cand.clone();
        neighbours.intersect_row(g.row(v));
        if neighbours.count() as u64 >= table[s - 1][t] {
            clique.push(v);
            cand = neighbours;
            s -= 1;
        } else {
            cand.subtract_row(g.row(v));
            let need = table[s][t - 1];
            if (cand.count() as u64) < need {
                return Err(ExtractError::breach(
                    "es_pascal_split",
                    format!(
                        "neither side of vertex {v} is large enough: {} non-neighbours < {need}",
                        cand.count()
                    ),
                ));
            }
            independent.push(v);
            t -= 1;
        }
    }
}

/// Greedy clique: repeatedly take the candidate with the fewest
/// non-neighbours among the remaining candidates (lowest index on ties),
/// then restrict the candidates to its neighbours.
///
/// On the complement this is the minimum-degree greedy independent set, so
/// the result has at least `n / (d̄ + 1)` vertices where `d̄` is the
/// complement's average degree.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    greedy_clique_capped(g, usize::MAX)
}

/// [`greedy_clique`] stopped once `cap` vertices are chosen.
pub(crate) fn greedy_clique_capped(g: &Graph, cap: usize) -> Vec<usize> {
    let mut cand = BitSet::full(g.n());
    let mut clique = Vec::new();
    while clique.len() < cap {
        let mut best: Option<(usize, usize)> = None;
        for v in cand.iter() {
            let kept = cand.count_and(g.row(v));
            if best.is_none_or(|(_, b)| kept > b) {
                best = Some((v, kept));
            }
        }
        let Some((v, _)) = best else { break };
        clique.push(v);
        cand.intersect_row(g.row(v));
    }
    clique.sort_unstable();
    clique
}
