//! The middle range `100 < k < √n`.

use std::collections::BTreeMap;

use super::recursion::{es_extract_within, greedy_clique_capped};
use super::{check_density, ExtractError, Extraction, ExtractionTrace, Relation};
use crate::bounds::{case3_thresholds, es_bound, required_size, saturating_u64, target_size, CaseLabel};
use crate::graph_core::{BitSet, Graph, HomogeneousWitness, TheoremParams, WitnessCase, WitnessKind, TARGET_TOLERANCE};

/// Vertices outside a clique `A`, grouped by the part of `A` they miss.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MissingSubsetGroups {
    /// `A ∖ N(b)` (sorted) → the vertices `b` with that key (ascending).
    pub groups: BTreeMap<Vec<usize>, Vec<usize>>,
    /// Vertices with at most `(1 − 10/k)·|A|` neighbours in `A`.
    pub excluded: Vec<usize>,
}

impl MissingSubsetGroups {
    pub fn qualifying(&self) -> usize {
        self.groups.values().map(Vec::len).sum()
    }

    /// Largest group; the lexicographically smallest key wins ties.
    pub fn largest(&self) -> Option<(&Vec<usize>, &Vec<usize>)> {
        let mut best: Option<(&Vec<usize>, &Vec<usize>)> = None;
        for (key, members) in &self.groups {
            if best.is_none_or(|(_, m)| members.len() > m.len()) {
                best = Some((key, members));
            }
        }
        best
    }
}

/// Groups every `b ∉ a` with more than `(1 − 10/k)·|a|` neighbours in `a` by
/// its missing subset `a ∖ N(b)`. `a` should be a clique of `h`.
pub fn group_by_missing_subset(h: &Graph, a: &[usize], k: f64) -> MissingSubsetGroups {
    debug_assert!(h.check_homogeneous(a).map(|x| x.is_clique()).unwrap_or(false));
    let threshold = (1.0 - 10.0 / k) * a.len() as f64;
    let in_a = BitSet::from_indices(h.n(), a.iter().copied());
    let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    let mut excluded = Vec::new();
    for b in (0..h.n()).filter(|&b| !in_a.contains(b)) {
        let missing: Vec<usize> = a.iter().copied().filter(|&x| !h.has_edge(b, x)).collect();
        let hits = (a.len() - missing.len()) as f64;
        if hits > threshold {
            groups.entry(missing).or_default().push(b);
        } else {
            excluded.push(b);
        }
    }
    MissingSubsetGroups { groups, excluded }
}

/// Middle-range extraction.
///
/// 1. Drop `W`, the vertices of degree `< (1 − 2/k)·n`; call the rest `H`.
/// 2. Start from `initial_clique` (or a greedy clique of `H`).
/// 3. While `|A|` is below the target: group `H ∖ A` by missing subset,
///    take the largest group `B′` with key `A′`, and search `H[B′]` for a
///    clique of `|A′| + 1` or an independent set of `⌈target⌉`. An
///    independent set is returned; a clique `Q` replaces `A′`, giving the
///    strictly larger clique `(A ∖ A′) ∪ Q`.
///
/// Every counting step of the existence argument is checked at runtime and
/// logged in the trace.
pub fn extract_case3(
    g: &Graph,
    p: &TheoremParams,
    initial_clique: Option<&[usize]>,
) -> Result<Extraction, ExtractError> {
    check_density(g, p)?;
    let nf = p.n() as f64;
    let k = p.k();
    if !(k > crate::bounds::SMALL_K_LIMIT && k < nf.sqrt()) {
        return Err(ExtractError::PreconditionViolated(format!(
            "middle range needs 100 < k < √n = {}, got k = {k}",
            nf.sqrt()
        )));
    }
    let mut trace = ExtractionTrace::new(CaseLabel::Case3);
    let report = case3_thresholds(p, 1);

    let degrees = g.degrees();
    let (removed, kept): (Vec<usize>, Vec<usize>) =
        (0..g.n()).partition(|&v| (degrees[v] as f64) < report.degree_threshold);
    trace.w_removed = removed;
    trace.require("w_at_most_half", trace.w_removed.len() as f64, Relation::Le, nf / 2.0, None)?;
    let h = g.induced_by_sorted(&kept);
    let to_g = |local: &[usize]| -> Vec<usize> { local.iter().map(|&i| kept[i]).collect() };

    let mut a: Vec<usize> = match initial_clique {
        Some(init) => {
            let mut local = Vec::with_capacity(init.len());
            for &v in init {
                match kept.binary_search(&v) {
                    Ok(i) => local.push(i),
                    Err(_) => {
                        return Err(ExtractError::PreconditionViolated(format!(
                            "initial clique vertex {v} is not in H (out of range or low degree)"
                        )))
                    }
                }
            }
            local.sort_unstable();
            local.dedup();
            if local.is_empty() || !h.check_homogeneous(&local).map(|x| x.is_clique()).unwrap_or(false) {
                return Err(ExtractError::PreconditionViolated(
                    "initial clique must be a non-empty clique".into(),
                ));
            }
            local
        }
        None => {
            trace.greedy_used = true;
            greedy_clique_capped(&h, required_size(p))
        }
    };

    let target = target_size(p);
    let t0 = required_size(p);
    trace.clique_history.push((0, a.len()));
    let mut iteration = 0;
    loop {
        if a.len() as f64 >= target - TARGET_TOLERANCE {
            let w = HomogeneousWitness::new(WitnessKind::Clique, to_g(&a), WitnessCase::Case3);
            return Ok((w, trace));
        }
        iteration += 1;
        let it = Some(iteration);
        trace.require("iterations_at_most_n", iteration as f64, Relation::Le, nf, it)?;

        let report = case3_thresholds(p, a.len());
        let grouped = group_by_missing_subset(&h, &a, k);
        trace.require("bad_vertices_at_most_n_over_5", grouped.excluded.len() as f64, Relation::Le, report.n_fifth, it)?;
        trace.require("qualifying_at_least_n_over_4", grouped.qualifying() as f64, Relation::Ge, report.n_quarter, it)?;
        let (key, members) = grouped.largest().ok_or_else(|| ExtractError::breach("nonempty_groups", "no qualifying vertices".into()))?;
        trace.a_prime = to_g(key);
        trace.b_prime_size = members.len();
        trace.require("b_prime_at_least_sqrt_n", members.len() as f64, Relation::Ge, report.sqrt_n, it)?;

        let s0 = key.len() + 1;
        let bound = saturating_u64(&es_bound(s0 as u64, t0 as u64)) as f64;
        trace.require("b_prime_at_least_ramsey_bound", members.len() as f64, Relation::Ge, bound, it)?;

        trace.es_calls += 1;
        let cand = BitSet::from_indices(h.n(), members.iter().copied());
        let (kind, found) = es_extract_within(&h, cand, s0, t0)?;
        match kind {
            WitnessKind::IndependentSet => {
                let w = HomogeneousWitness::new(WitnessKind::IndependentSet, to_g(&found), WitnessCase::Case3);
                return Ok((w, trace));
            }
            WitnessKind::Clique => {
                let before = a.len();
                a.retain(|v| key.binary_search(v).is_err());
                a.extend(found);
                a.sort_unstable();
                let is_clique = h.check_homogeneous(&a).map(|x| x.is_clique()).unwrap_or(false);
                trace.require("merged_set_is_clique", f64::from(u8::from(is_clique)), Relation::Ge, 1.0, it)?;
                trace.require("clique_grows", a.len() as f64, Relation::Gt, before as f64, it)?;
                trace.clique_history.push((iteration, a.len()));
            }
        }
    }
}
