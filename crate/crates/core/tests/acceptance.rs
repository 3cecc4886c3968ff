//! Acceptance suite. Each test prints one `PASS`/`FAIL` line and then
//! asserts, so `cargo test --test acceptance -- --nocapture` gives a
//! readable summary.

use std::time::{Duration, Instant};

use dense_ramsey::bounds::{es_upper_bound, min_edges, target_size, turan_max_edges, validate_params, CaseLabel};
use dense_ramsey::cli::format::{witness_to_string, write_witness};
use dense_ramsey::cli::sweep::{csv_string, run_sweep, write_csv, SweepConfig};
use dense_ramsey::cli::trace_to_comments;
use dense_ramsey::extractor::{es_extract, extract, extract_with, ExtractOptions};
use dense_ramsey::generators::{random_graph_exact_edges, rng_from_seed, turan_graph};
use dense_ramsey::graph_core::{pair_count, verify_witness, Epsilon, TwoColoring};
use dense_ramsey::oracle::{max_clique_exact, max_independent_set_exact, ramsey_check};
use dense_ramsey::{Graph, WitnessKind};
use num_bigint::BigUint;
use rand::Rng;

fn report(id: u32, ok: bool, detail: &str) {
    println!("{} criterion {id}: {detail}", if ok { "PASS" } else { "FAIL" });
}

/// Graph on `n` vertices whose edges are the set bits of `mask`, pairs in
/// lexicographic order.
fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Clique number by trying every vertex subset.
fn brute_clique_number(g: &Graph) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|&s| {
            let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
            vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| u != v && g.has_edge(u, v)))
}

fn is_independent(g: &Graph, vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| u != v && !g.has_edge(u, v)))
}

/// `C(n, r)` from Pascal's rule in u128.
fn pascal(n: usize, r: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![1u128; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row.get(r).copied().unwrap_or(0)
}

fn bound_u64(s: usize, t: usize) -> u64 {
    let b = es_upper_bound(s as f64, t as f64);
    u64::try_from(&b).unwrap_or(u64::MAX)
}

#[test]
fn criterion_1_ramsey_sanity() {
    let start = Instant::now();
    let six = ramsey_check(6, 3, 3).unwrap();
    let five = ramsey_check(5, 3, 3).unwrap();
    let mut ok = six.holds && six.counterexample.is_none() && !five.holds;
    let mut detail = String::new();
    if let Some(g) = &five.counterexample {
        let omega = brute_clique_number(g);
        let alpha = brute_clique_number(&g.complement());
        // A graph on 5 vertices with ω = α = 2 is C_5: 2-regular with 5 edges.
        let cycle = g.edge_count() == 5 && g.degrees().iter().all(|&d| d == 2);
        ok &= omega == 2 && alpha == 2 && cycle;
        detail = format!("counterexample ω = {omega}, α = {alpha}, C_5-shaped = {cycle}");
    } else {
        ok = false;
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(30);
    report(1, ok, &format!("R(3,3) = 6 confirmed; {detail}; {elapsed:.2?}"));
    assert!(ok);
}

#[test]
fn criterion_2_ramsey_upper_bound_values() {
    let mut ok = es_upper_bound(3.0, 3.0) == BigUint::from(6u32) && es_upper_bound(4.0, 4.0) == BigUint::from(20u32);
    for t in 1..=10u32 {
        ok &= es_upper_bound(2.0, f64::from(t)) == BigUint::from(t);
    }
    for s in 1..=20usize {
        for t in 1..=20usize {
            ok &= u128::from(bound_u64(s, t)) == pascal(s + t - 2, s - 1);
        }
    }
    let mut checked = 0;
    for s in 1..=7usize {
        for t in 1..=7usize {
            let b = bound_u64(s, t);
            if b <= 7 {
                let outcome = ramsey_check(b as usize, s, t).unwrap();
                ok &= outcome.holds;
                checked += 1;
            }
        }
    }
    report(2, ok, &format!("exact values match Pascal's rule; {checked} (s,t) pairs with bound <= 7 hold exhaustively"));
    assert!(ok);
}

#[test]
fn criterion_3_recursion_totality() {
    let start = Instant::now();
    let mut calls = 0u64;
    let mut failures = Vec::new();
    for n in 1..=6usize {
        let pairs: Vec<(usize, usize)> = (1..=n + 1)
            .flat_map(|s| (1..=n + 1).map(move |t| (s, t)))
            .filter(|&(s, t)| bound_u64(s, t) <= n as u64)
            .collect();
        for mask in 0..1u64 << pair_count(n) {
            let g = graph_from_mask(n, mask);
            for &(s, t) in &pairs {
                calls += 1;
                let valid = match es_extract(&g, s, t) {
                    Ok(w) => match w.kind {
                        WitnessKind::Clique => w.size() == s && is_clique(&g, &w.vertices),
                        WitnessKind::IndependentSet => w.size() == t && is_independent(&g, &w.vertices),
                    },
                    Err(_) => false,
                };
                if !valid && failures.len() < 5 {
                    failures.push((n, mask, s, t));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed < Duration::from_secs(300);
    report(3, ok, &format!("{calls} calls on all graphs with n <= 6, failures {failures:?}, {elapsed:.2?}"));
    assert!(ok);
}

const GRID_N: [usize; 4] = [50, 100, 200, 400];
const GRID_K: [f64; 7] = [2.0, 5.0, 10.0, 50.0, 100.0, 150.0, 300.0];

fn soundness_config() -> SweepConfig {
    SweepConfig {
        n_list: GRID_N.to_vec(),
        k_list: GRID_K.to_vec(),
        c: 0.01,
        reps: 50,
        seed: 2024,
        fixed_timing: true,
    }
}

#[test]
fn criterion_4_soundness_sweep() {
    let start = Instant::now();
    let cfg = soundness_config();
    let out = run_sweep(&cfg);
    let expected_cells: usize = GRID_N
        .iter()
        .map(|&n| GRID_K.iter().filter(|&&k| k <= n as f64 / 0.03).count())
        .sum();
    let mut ok = out.rows.len() == expected_cells * 50 && out.skipped.is_empty();
    // Re-check every row from the CSV text alone.
    let csv = csv_string(&out.rows);
    let mut min_ratio = f64::INFINITY;
    for line in csv.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        let ratio: f64 = fields[7].parse().unwrap();
        min_ratio = min_ratio.min(ratio);
        ok &= ratio >= 1.0 - 1e-9 && fields[4] != "failed";
    }
    // Independent re-verification of a sample of the instances.
    for row in out.rows.iter().step_by(7) {
        let p = validate_params(row.n, row.k, row.c).unwrap();
        let g = random_graph_exact_edges(row.n, min_edges(row.n, row.k), row.seed).unwrap();
        // ⌈(1 − 1/k)·N⌉ for integer k.
        let (k, total) = (row.k as usize, pair_count(row.n));
        let want = ((k - 1) * total).div_ceil(k);
        ok &= g.edge_count() == want;
        let (w, _) = extract(&g, &p).unwrap();
        let homogeneous = match w.kind {
            WitnessKind::Clique => is_clique(&g, &w.vertices),
            WitnessKind::IndependentSet => is_independent(&g, &w.vertices),
        };
        ok &= homogeneous && w.size() as f64 >= target_size(&p) - 1e-9;
    }
    ok &= out.all_verified();
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(600);
    report(
        4,
        ok,
        &format!("{} instances verified, min ratio {min_ratio:.4}, {elapsed:.2?}", out.rows.len()),
    );
    assert!(ok);
}

#[test]
fn criterion_5_oracle_dominance() {
    let start = Instant::now();
    let n = 60;
    let mut ok = true;
    let mut instances = 0;
    for &k in &GRID_K {
        let p = validate_params(n, k, 0.01).unwrap();
        for seed in 0..20u64 {
            let g = random_graph_exact_edges(n, min_edges(n, k), seed * 7919 + k as u64).unwrap();
            let (w, _) = extract(&g, &p).unwrap();
            let omega = max_clique_exact(&g, None).unwrap();
            let alpha = max_independent_set_exact(&g, None).unwrap();
            let best = omega.best_size.max(alpha.best_size);
            ok &= omega.exhausted && alpha.exhausted;
            ok &= w.size() <= best && w.size() as f64 >= target_size(&p) - 1e-9;
            ok &= verify_witness(&g, &w, &p).unwrap();
            instances += 1;
        }
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(600);
    report(5, ok, &format!("{instances} instances at n = 60 between target and max(ω, α); {elapsed:.2?}"));
    assert!(ok);
}

fn case3_run(seed: u64) -> (String, String) {
    let (n, k) = (20000, 130.0);
    let p = validate_params(n, k, 0.01).unwrap();
    let g = random_graph_exact_edges(n, min_edges(n, k), seed).unwrap();
    let opts = ExtractOptions { initial_clique: Some(vec![0]), ..ExtractOptions::default() };
    let (w, trace) = extract_with(&g, &p, &opts).unwrap();
    (witness_to_string(&w), trace_to_comments(&trace))
}

#[test]
fn criterion_6_middle_range_loop() {
    let start = Instant::now();
    let (n, k) = (20000, 130.0);
    let p = validate_params(n, k, 0.01).unwrap();
    let g = random_graph_exact_edges(n, min_edges(n, k), 6).unwrap();
    let mut ok = g.edge_count() == min_edges(n, k);
    // Vertex 0 must survive the degree filter to serve as the initial clique.
    ok &= (g.degree(0) as f64) >= (1.0 - 2.0 / k) * n as f64;
    let opts = ExtractOptions { initial_clique: Some(vec![0]), ..ExtractOptions::default() };
    let (w, trace) = extract_with(&g, &p, &opts).unwrap();
    ok &= trace.case_used == CaseLabel::Case3;
    let iterations = trace.clique_history.len() - 1;
    ok &= iterations >= 1 && trace.clique_history[0] == (0, 1);
    ok &= trace.clique_history.windows(2).all(|w| w[1].1 > w[0].1);
    ok &= trace.assertions_checked.iter().all(|c| c.holds);
    for name in [
        "w_at_most_half",
        "qualifying_at_least_n_over_4",
        "b_prime_at_least_sqrt_n",
        "b_prime_at_least_ramsey_bound",
    ] {
        ok &= trace.assertions_checked.iter().any(|c| c.name == name);
    }
    // Independent recount of |W|.
    let low = (0..n).filter(|&v| (g.degree(v) as f64) < (1.0 - 2.0 / k) * n as f64).count();
    ok &= low == trace.w_removed.len() && low as f64 <= n as f64 / 2.0;
    let homogeneous = match w.kind {
        WitnessKind::Clique => is_clique(&g, &w.vertices),
        WitnessKind::IndependentSet => is_independent(&g, &w.vertices),
    };
    ok &= homogeneous && verify_witness(&g, &w, &p).unwrap();
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(60);
    report(
        6,
        ok,
        &format!(
            "{iterations} iterations, history {:?}, {} checks hold, |W| = {low}, witness {} of size {}; {elapsed:.2?}",
            trace.clique_history,
            trace.assertions_checked.len(),
            w.kind,
            w.size()
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_7_turan_tightness() {
    let mut ok = true;
    let mut graphs = 0;
    for r in 2..=8usize {
        for n in r..=40usize {
            let g = turan_graph(n, r).unwrap();
            let (q, rem) = (n / r, n % r);
            let inside = rem as u128 * pascal(q + 1, 2) + (r - rem) as u128 * pascal(q, 2);
            let closed_form = pascal(n, 2) - inside;
            ok &= g.edge_count() as u128 == closed_form;
            ok &= g.edge_count() as f64 <= turan_max_edges(n, r + 1).unwrap();
            let omega = max_clique_exact(&g, None).unwrap();
            ok &= omega.exhausted && omega.best_size == r;
            graphs += 1;
        }
    }
    report(7, ok, &format!("{graphs} Turán graphs with ω = r and closed-form edge counts"));
    assert!(ok);
}

#[test]
fn criterion_8_balance_equivalence() {
    let mut rng = rng_from_seed(8);
    let eps_list = [(1u64, 10u64), (1, 6), (1, 4), (1, 2)];
    let mut discrepancies = 0;
    let mut unbalanced = 0;
    for i in 0..1000 {
        let n: usize = rng.gen_range(4..=50);
        let (num, den) = eps_list[i % eps_list.len()];
        let eps = Epsilon::rational(num, den).unwrap();
        let total = pair_count(n);
        // Red counts cluster around both thresholds and the midpoint.
        let pivot = match rng.gen_range(0..3) {
            0 => total * num as usize / den as usize,
            1 => total - total * num as usize / den as usize,
            _ => total / 2,
        };
        let red = (pivot as i64 + rng.gen_range(-3i64..=3)).clamp(0, total as i64) as usize;
        let red_graph = random_graph_exact_edges(n, red, rng.gen()).unwrap();
        let coloring = TwoColoring::from_red_graph(red_graph);
        let balanced = coloring.is_eps_balanced(eps).unwrap();
        let (majority, _) = coloring.majority_graph().unwrap();
        // majority > (1 − num/den)·total  ⇔  majority·den > (den − num)·total
        let lhs = majority.edge_count() as u128 * u128::from(den);
        let rhs = u128::from(den - num) * total as u128;
        if !balanced != (lhs > rhs) {
            discrepancies += 1;
        }
        unbalanced += usize::from(!balanced);
    }
    let ok = discrepancies == 0 && unbalanced > 0 && unbalanced < 1000;
    report(8, ok, &format!("1000 colorings ({unbalanced} unbalanced), {discrepancies} discrepancies"));
    assert!(ok);
}

#[test]
fn criterion_9_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = soundness_config();
    let first = run_sweep(&cfg);
    let second = run_sweep(&cfg);
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    write_csv(&first.rows, &a).unwrap();
    write_csv(&second.rows, &b).unwrap();
    let csv_same = std::fs::read(&a).unwrap() == std::fs::read(&b).unwrap();

    let (w1, t1) = case3_run(6);
    let (w2, t2) = case3_run(6);
    let p = validate_params(20000, 130.0, 0.01).unwrap();
    let g = random_graph_exact_edges(20000, min_edges(20000, 130.0), 6).unwrap();
    let opts = ExtractOptions { initial_clique: Some(vec![0]), ..ExtractOptions::default() };
    let (w, _) = extract_with(&g, &p, &opts).unwrap();
    let (wa, wb) = (dir.path().join("a.wit"), dir.path().join("b.wit"));
    write_witness(&w, &wa).unwrap();
    std::fs::write(&wb, &w2).unwrap();
    let witness_same = w1 == w2 && std::fs::read(&wa).unwrap() == std::fs::read(&wb).unwrap();
    let trace_same = t1 == t2;

    let ok = csv_same && witness_same && trace_same;
    report(
        9,
        ok,
        &format!("sweep CSV identical = {csv_same}, middle-range witness identical = {witness_same}, trace identical = {trace_same}"),
    );
    assert!(ok);
}
