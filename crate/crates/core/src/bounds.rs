//! Parameter validation, the target size, case classification and the
//! numeric thresholds used by the extractor. Pure arithmetic.
//!
//! Logarithms are base 2 throughout.

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::graph_core::{pair_count, GraphError, TheoremParams};

/// Largest admissible constant `C`.
pub const MAX_C: f64 = 0.01;

/// Boundary between the small-`k` branch and the others.
pub const SMALL_K_LIMIT: f64 = 100.0;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ConstraintViolation {
    #[error("n must be at least 3, got {n}")]
    NTooSmall { n: usize },
    #[error("k must be a real number >= 2, got {k}")]
    KTooSmall { k: f64 },
    #[error("C must lie in (0, 0.01], got {c}")]
    COutOfRange { c: f64 },
    #[error("k = {k} exceeds n/(3C) = {limit}")]
    KTooLarge { k: f64, limit: f64 },
}

pub fn validate_params(n: usize, k: f64, c: f64) -> Result<TheoremParams, ConstraintViolation> {
    if n < 3 {
        return Err(ConstraintViolation::NTooSmall { n });
    }
    if !(k >= 2.0) || !k.is_finite() {
        return Err(ConstraintViolation::KTooSmall { k });
    }
    if !(c > 0.0 && c <= MAX_C) {
        return Err(ConstraintViolation::COutOfRange { c });
    }
    let limit = n as f64 / (3.0 * c);
    if k > limit {
        return Err(ConstraintViolation::KTooLarge { k, limit });
    }
    Ok(TheoremParams { n, k, c })
}

/// `C·k·log n / log k`.
pub fn target_size(p: &TheoremParams) -> f64 {
    p.c * p.k * (p.n as f64).log2() / p.k.log2()
}

/// The smallest integer witness size that reaches the target (at least 1).
pub fn required_size(p: &TheoremParams) -> usize {
    let t = target_size(p) - crate::graph_core::TARGET_TOLERANCE;
    (t.ceil() as usize).max(1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    Case1,
    Case2,
    Case3,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseLabel::Case1 => "case1",
            CaseLabel::Case2 => "case2",
            CaseLabel::Case3 => "case3",
        })
    }
}

/// `k ≤ 100` first, then `k ≥ √n`, otherwise the middle range.
pub fn classify_case(p: &TheoremParams) -> CaseLabel {
    if p.k <= SMALL_K_LIMIT {
        CaseLabel::Case1
    } else if p.k >= (p.n as f64).sqrt() {
        CaseLabel::Case2
    } else {
        CaseLabel::Case3
    }
}

/// Largest number of non-adjacent pairs allowed by the density hypothesis,
/// `⌊C(n,2)/k⌋`.
pub fn max_non_edges(n: usize, k: f64) -> usize {
    (pair_count(n) as f64 / k).floor() as usize
}

/// Smallest edge count meeting `|E| ≥ (1 − 1/k)·C(n,2)`, i.e.
/// `⌈(1 − 1/k)·C(n,2)⌉`.
pub fn min_edges(n: usize, k: f64) -> usize {
    pair_count(n) - max_non_edges(n, k).min(pair_count(n))
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// Ramsey upper bound `C(⌈s⌉+⌈t⌉−2, ⌈s⌉−1)`.
///
/// Panics unless `s ≥ 1` and `t ≥ 1`.
pub fn es_upper_bound(s: f64, t: f64) -> BigUint {
    assert!(s >= 1.0 && t >= 1.0, "es_upper_bound needs s, t >= 1 (got {s}, {t})");
    es_bound(s.ceil() as u64, t.ceil() as u64)
}

/// Integer form of [`es_upper_bound`].
pub fn es_bound(s: u64, t: u64) -> BigUint {
    assert!(s >= 1 && t >= 1, "es_bound needs s, t >= 1 (got {s}, {t})");
    binomial(s + t - 2, s - 1)
}

/// Saturating `u64` table of [`es_bound`] for all `s' ≤ s`, `t' ≤ t`, built
/// from Pascal's rule. Row/column 0 are unused.
pub(crate) fn es_bound_table(s: usize, t: usize) -> Vec<Vec<u64>> {
    let mut table = vec![vec![0u64; t + 1]; s + 1];
    for i in 1..=s {
        for j in 1..=t {
            table[i][j] = if i == 1 || j == 1 {
                1
            } else {
                table[i - 1][j].saturating_add(table[i][j - 1])
            };
        }
    }
    table
}

/// `(1 − 1/(r−1))·n²/2`, the edge cap for `K_r`-free graphs.
pub fn turan_max_edges(n: usize, r: usize) -> Result<f64, GraphError> {
    if r < 2 {
        return Err(GraphError::InvalidInput(format!("Turán bound needs r >= 2, got {r}")));
    }
    let nf = n as f64;
    Ok((1.0 - 1.0 / (r as f64 - 1.0)) * nf * nf / 2.0)
}

/// The clique order `⌈2Ck⌉` whose absence the large-`k` branch refutes.
pub fn case2_clique_order(p: &TheoremParams) -> usize {
    (2.0 * p.c * p.k).ceil() as usize
}

/// Thresholds and comparison values of the middle-range argument.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub target: f64,
    /// Ramsey bound at `s = 10|A|/k`, `t = k·log n/(100·log k)`, both
    /// raised to at least 1.
    pub es_bound: BigUint,
    /// Turán cap at `r = ⌈2Ck⌉`, when `r ≥ 2`.
    pub turan_limit: Option<f64>,
    /// Vertices of degree strictly below this are removed.
    pub degree_threshold: f64,
    /// Vertices with more than this many neighbours in the clique qualify.
    pub neighbor_threshold: f64,
    /// `(10|A|/k)·(e·k/10)^(10|A|/k)`.
    pub subset_count_cap: f64,
    pub n_fifth: f64,
    pub n_quarter: f64,
    pub n_cube_root: f64,
    pub sqrt_n: f64,
    pub n_tenth_root: f64,
    pub remaining_floor: f64,
}

pub fn case3_thresholds(p: &TheoremParams, a_size: usize) -> BoundReport {
    let n = p.n as f64;
    let k = p.k;
    let a = a_size as f64;
    let target = target_size(p);
    if k <= n / (p.c * p.c) {
        assert!(target <= n, "target {target} exceeds n = {n} with k <= n/C^2");
    }
    let s = (10.0 * a / k).max(1.0);
    let t = (k * n.log2() / (100.0 * k.log2())).max(1.0);
    let r = case2_clique_order(p);
    let y = 10.0 * a / k;
    BoundReport {
        target,
        es_bound: es_upper_bound(s, t),
        turan_limit: turan_max_edges(p.n, r).ok(),
        degree_threshold: (1.0 - 2.0 / k) * n,
        neighbor_threshold: (1.0 - 10.0 / k) * a,
        subset_count_cap: y * (std::f64::consts::E * k / 10.0).powf(y),
        n_fifth: n / 5.0,
        n_quarter: n / 4.0,
        n_cube_root: n.cbrt(),
        sqrt_n: n.sqrt(),
        n_tenth_root: n.powf(0.1),
        remaining_floor: 0.49 * n,
    }
}

/// Converts a bound to `u64`, saturating.
pub(crate) fn saturating_u64(x: &BigUint) -> u64 {
    x.to_u64().unwrap_or(u64::MAX)
}
