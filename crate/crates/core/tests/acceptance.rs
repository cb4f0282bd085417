//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (visible with `cargo test -- --nocapture`).

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use paritydom::gf2::{self, Gf2Vector};
use paritydom::graph::{self, Graph};
use paritydom::{domination, oracle};

fn report(name: &str, failures: &[String], cases: usize, elapsed: Duration) {
    if failures.is_empty() {
        println!("{name}: PASS ({cases} cases, {elapsed:.2?})");
    } else {
        println!("{name}: FAIL ({} failures of {cases})", failures.len());
        panic!("{name} failed, first counterexample: {}", failures[0]);
    }
}

fn random_graph(rng: &mut ChaCha8Rng, n_range: std::ops::RangeInclusive<usize>) -> Graph {
    let n = rng.gen_range(n_range);
    let p = rng.gen_range(0.05..0.95);
    graph::random_gnp(n, p, rng.gen())
}

/// Exhaustive labeled graphs with n <= 5 (1 + 2 + 8 + 64 + 1024), plus
/// `extra` random graphs with n in [6, 64]; the corpus of criterion 1.
fn main_corpus(extra: usize) -> Vec<Graph> {
    let mut corpus: Vec<Graph> = (1..=5).flat_map(oracle::all_labeled_graphs).collect();
    assert_eq!(corpus.len(), 1 + 2 + 8 + 64 + 1024);
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE97);
    corpus.extend((0..extra).map(|_| random_graph(&mut rng, 6..=64)));
    corpus
}

/// Labeled graphs with n <= 5 plus 200 random graphs with n in [6, 12];
/// the corpus of criterion 2.
fn oracle_corpus() -> Vec<Graph> {
    let mut corpus: Vec<Graph> = (1..=5).flat_map(oracle::all_labeled_graphs).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0AC1E);
    corpus.extend((0..200).map(|_| random_graph(&mut rng, 6..=12)));
    corpus
}

#[test]
fn criterion_01_main_theorem_sweep() {
    let start = Instant::now();
    let corpus = main_corpus(10_000);
    let mut failures = Vec::new();
    for g in &corpus {
        let s = domination::odd_dominating_set(g);
        let rho = domination::rank_of(g);
        let nu = g.vertex_count() - rho;
        if (s.len() % 2 != rho % 2) || ((g.vertex_count() - s.len()) % 2 != nu % 2) {
            failures.push(graph::emit_graph6(g));
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "too slow: {elapsed:?}");
    report("criterion 1 (main theorem sweep)", &failures, corpus.len(), elapsed);
}

#[test]
fn criterion_02_oracle_equivalence() {
    let start = Instant::now();
    let corpus = oracle_corpus();
    let mut failures = Vec::new();
    for g in &corpus {
        let canonical = domination::odd_dominating_set(g);
        let basis = domination::even_dominating_basis(g);
        let mut coset: Vec<Vec<usize>> = (0u32..1 << basis.len())
            .map(|mask| {
                let mut v = canonical.to_vector();
                for (i, b) in basis.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        v ^= &b.to_vector();
                    }
                }
                v.support().collect()
            })
            .collect();
        coset.sort();
        let mut oracle_sets: Vec<Vec<usize>> = oracle::enumerate_odd_dominating(g, oracle::DEFAULT_LIMIT)
            .iter()
            .map(|s| s.iter().collect())
            .collect();
        oracle_sets.sort();
        let even_count = oracle::enumerate_even_dominating(g, oracle::DEFAULT_LIMIT).len();
        if coset != oracle_sets || even_count != 1 << domination::nullity(g) {
            failures.push(graph::emit_graph6(g));
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "too slow: {elapsed:?}");
    report("criterion 2 (oracle equivalence)", &failures, corpus.len(), elapsed);
}

#[test]
fn criterion_03_symmetric_inverse_parity() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x1E3A1);
    let mut failures = Vec::new();
    let cases = 1000;
    for _ in 0..cases {
        let n = rng.gen_range(1..=64);
        let a = gf2::random_symmetric_unit_diagonal_invertible(n, rng.gen());
        let inv = gf2::invert(&a).expect("generator output must be invertible");
        let expected = n % 2 == 1;
        if a.entry_sum_parity() != expected || inv.entry_sum_parity() != expected {
            failures.push(format!("n={n}"));
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "too slow: {elapsed:?}");
    report("criterion 3 (symmetric inverse parity)", &failures, cases, elapsed);
}

#[test]
fn criterion_04_null_vertices_and_differences() {
    let start = Instant::now();
    let corpus = main_corpus(10_000);
    let mut failures = Vec::new();
    let mut vertex_cases = 0usize;
    for g in &corpus {
        let nulls = domination::null_vertices(g);
        for v in 0..g.vertex_count() {
            vertex_cases += 1;
            let nd = domination::null_difference(g, v);
            if !(-1..=1).contains(&nd) || (nulls.contains(v) != (nd == -1)) {
                failures.push(format!("{} v={v}", graph::emit_graph6(g)));
            }
        }
    }
    report(
        "criterion 4 (null vertices / null differences)",
        &failures,
        vertex_cases,
        start.elapsed(),
    );
}

#[test]
fn criterion_05_avoiding_construction() {
    let start = Instant::now();
    let corpus = oracle_corpus();
    let mut failures = Vec::new();
    let mut cases = 0usize;
    for g in &corpus {
        let n_matrix = g.closed_neighborhood_matrix();
        for v in domination::null_vertices(g).iter() {
            cases += 1;
            match domination::odd_dominating_avoiding(g, v) {
                Ok(s) => {
                    let dominates =
                        n_matrix.mul_vector(&s.to_vector()) == Gf2Vector::ones(g.vertex_count());
                    if s.contains(v) || !dominates {
                        failures.push(format!("{} v={v}", graph::emit_graph6(g)));
                    }
                }
                Err(_) => failures.push(format!("{} v={v} (rejected)", graph::emit_graph6(g))),
            }
        }
    }
    report("criterion 5 (avoiding construction)", &failures, cases, start.elapsed());
}

#[test]
fn criterion_06_odd_degree_intersection_chain() {
    let start = Instant::now();
    let corpus = main_corpus(10_000);
    let mut failures = Vec::new();
    let mut cases = 0usize;
    for g in &corpus {
        let nu = domination::nullity(g);
        let d = g.degree_parity_profile();
        cases += 1;
        if domination::odd_degree_intersection_parity(g) != (nu % 2 == 1) {
            failures.push(graph::emit_graph6(g));
        }
        // every odd dominating set, not just the canonical one
        if g.vertex_count() <= 10 {
            for s in oracle::enumerate_odd_dominating(g, oracle::DEFAULT_LIMIT) {
                cases += 1;
                let chain = d.intersection(&s).len() % 2 == nu % 2
                    && (g.vertex_count() - s.len()) % 2 == nu % 2;
                if !chain {
                    failures.push(format!("{} S={:?}", graph::emit_graph6(g), s));
                }
            }
        }
    }
    report("criterion 6 (odd-degree intersection chain)", &failures, cases, start.elapsed());
}

#[test]
fn criterion_07_join_formulas() {
    let start = Instant::now();
    let pool: Vec<Graph> = vec![
        graph::complete(1),
        graph::path(2),
        graph::path(3),
        graph::cycle(4),
        graph::cycle(5),
        graph::star(4),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x301);
    let mut failures = Vec::new();
    let cases = 500;
    for _ in 0..cases {
        let m = rng.gen_range(2..=4);
        let parts: Vec<Graph> = (0..m)
            .map(|_| {
                let pick = rng.gen_range(0..=pool.len());
                if pick == pool.len() {
                    random_graph(&mut rng, 1..=6)
                } else {
                    pool[pick].clone()
                }
            })
            .collect();
        let analysis = domination::analyze_join(&parts);
        let mut ok = analysis.predicted_nullity == analysis.direct_nullity;
        if m == 2 {
            let (_, r1, nu1) = analysis.parts[0];
            let (_, r2, nu2) = analysis.parts[1];
            ok &= domination::join_nullity_pairwise(nu1, r1, nu2, r2) == analysis.direct_nullity;
        }
        if !ok {
            failures.push(format!("{:?}", parts));
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "too slow: {elapsed:?}");
    report("criterion 7 (join formulas)", &failures, cases, elapsed);
}

#[test]
fn criterion_08_tree_nullity() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7BEE);
    let mut failures = Vec::new();
    let cases = 1000;
    for _ in 0..cases {
        let n = rng.gen_range(2..=40);
        let t = graph::random_tree(n, rng.gen());
        let even_degree_count = n - t.degree_parity_profile().len();
        let nu = domination::nullity(&t);
        let s = domination::odd_dominating_set(&t);
        let mut ok = true;
        if even_degree_count <= 1 {
            ok &= s.len() % 2 == 1;
        }
        match even_degree_count {
            0 => ok &= nu == 1,
            1 => ok &= nu == 0,
            _ => {}
        }
        if !ok {
            failures.push(graph::emit_graph6(&t));
        }
    }
    report("criterion 8 (tree nullity)", &failures, cases, start.elapsed());
}

#[test]
fn criterion_09_large_rank_performance() {
    use paritydom::gf2::Gf2Matrix;
    let mut rng = ChaCha8Rng::seed_from_u64(0x4096);
    let n = 4096;
    let mut m = Gf2Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if rng.gen::<bool>() {
                m.set(i, j, true);
            }
        }
    }
    let mut times = Vec::new();
    for _ in 0..3 {
        let t = Instant::now();
        let r = gf2::rank(&m);
        times.push(t.elapsed());
        assert!(r <= n);
    }
    times.sort();
    let median = times[1];
    let failures = if median < Duration::from_secs(5) {
        vec![]
    } else {
        vec![format!("median {median:?} over budget")]
    };
    report(
        &format!("criterion 9 (4096x4096 rank, median {median:.2?})"),
        &failures,
        3,
        times.iter().sum(),
    );
}

#[test]
fn criterion_10_format_fidelity() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xF1DE);
    let mut failures = Vec::new();
    let cases = 1000;
    for i in 0..cases {
        let g = random_graph(&mut rng, 1..=62);
        let edge_trip = graph::parse_edge_list(&graph::emit_edge_list(&g));
        let g6_trip = graph::parse_graph6(&graph::emit_graph6(&g));
        if edge_trip.as_ref() != Ok(&g) || g6_trip.as_ref() != Ok(&g) {
            failures.push(format!("case {i}, n={}", g.vertex_count()));
        }
    }
    let hand = [
        ("@", graph::complete(1)),
        ("A_", graph::path(2)),
        ("Bw", graph::complete(3)),
    ];
    for (text, expected) in hand {
        if graph::parse_graph6(text).as_ref() != Ok(&expected) {
            failures.push(format!("hand-encoded vector {text}"));
        }
    }
    report("criterion 10 (format fidelity)", &failures, cases + 3, start.elapsed());
}
