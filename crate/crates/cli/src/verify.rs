//! The `verify` subcommand: re-runs the library's identity sweeps and
//! reports per-property pass counts.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use paritydom::gf2::{self, Gf2Vector};
use paritydom::graph::{self, Graph};
use paritydom::{domination, oracle};

struct Property {
    name: &'static str,
    passed: usize,
    total: usize,
    first_counterexample: Option<String>,
}

impl Property {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            passed: 0,
            total: 0,
            first_counterexample: None,
        }
    }

    fn record(&mut self, ok: bool, witness: impl Fn() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.first_counterexample.is_none() {
            self.first_counterexample = Some(witness());
        }
    }
}

pub struct Outcome {
    properties: Vec<Property>,
}

impl Outcome {
    pub fn all_passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed == p.total)
    }
}

pub fn run(max_n: usize, trials: usize, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // exhaustive sweep for n <= min(max_n, 5), plus random graphs
    let mut corpus: Vec<Graph> = (1..=max_n.min(5))
        .flat_map(oracle::all_labeled_graphs)
        .collect();
    for _ in 0..trials {
        let n = rng.gen_range(6..=32);
        let p = rng.gen_range(0.05..0.95);
        corpus.push(graph::random_gnp(n, p, rng.gen()));
    }

    let mut main_theorem = Property::new("main theorem pr(|S|) = pr(rank)");
    let mut null_vertex = Property::new("null vertex iff nd(v) = -1");
    let mut avoiding = Property::new("avoiding construction");
    let mut corollaries = Property::new("corollaries C1-C4");
    let mut oracle_agreement = Property::new("oracle agreement (n <= 5)");

    for g in &corpus {
        let witness = || graph::emit_graph6(g);
        let s = domination::odd_dominating_set(g);
        let rho = domination::rank_of(g);
        main_theorem.record(s.len() % 2 == rho % 2, witness);

        let nulls = domination::null_vertices(g);
        let nd_ok = (0..g.vertex_count()).all(|v| {
            let nd = domination::null_difference(g, v);
            (-1..=1).contains(&nd) && (nulls.contains(v) == (nd == -1))
        });
        null_vertex.record(nd_ok, witness);

        let n_matrix = g.closed_neighborhood_matrix();
        let avoiding_ok = nulls.iter().all(|v| {
            domination::odd_dominating_avoiding(g, v).is_ok_and(|s2| {
                !s2.contains(v)
                    && n_matrix.mul_vector(&s2.to_vector()) == Gf2Vector::ones(g.vertex_count())
            })
        });
        avoiding.record(avoiding_ok, witness);

        corollaries.record(
            domination::corollary_suite(g).iter().all(|c| c.holds),
            witness,
        );

        if g.vertex_count() <= 5 {
            let sets = oracle::enumerate_odd_dominating(g, oracle::DEFAULT_LIMIT);
            let count_ok = sets.len() == 1 << domination::nullity(g);
            let parity = s.len() % 2;
            let parity_ok = sets.iter().all(|t| t.len() % 2 == parity);
            oracle_agreement.record(count_ok && parity_ok && sets.contains(&s), witness);
        }
    }

    let mut join = Property::new("join nullity formula");
    for _ in 0..trials.max(100) / 2 {
        let m = rng.gen_range(2..=4);
        let parts: Vec<Graph> = (0..m)
            .map(|_| {
                let n = rng.gen_range(1..=6);
                graph::random_gnp(n, rng.gen_range(0.1..0.9), rng.gen())
            })
            .collect();
        let analysis = domination::analyze_join(&parts);
        let mut ok = analysis.predicted_nullity == analysis.direct_nullity;
        if m == 2 {
            let (_, r1, nu1) = analysis.parts[0];
            let (_, r2, nu2) = analysis.parts[1];
            ok &= domination::join_nullity_pairwise(nu1, r1, nu2, r2) == analysis.direct_nullity;
        }
        join.record(ok, || {
            parts
                .iter()
                .map(graph::emit_graph6)
                .collect::<Vec<_>>()
                .join(" + ")
        });
    }

    let mut entry_parity = Property::new("symmetric inverse entry parity");
    for _ in 0..trials.max(100) {
        let n = rng.gen_range(1..=64);
        let a = gf2::random_symmetric_unit_diagonal_invertible(n, rng.gen());
        let ok = gf2::invert(&a).is_some_and(|inv| {
            a.entry_sum_parity() == (n % 2 == 1) && inv.entry_sum_parity() == (n % 2 == 1)
        });
        entry_parity.record(ok, || format!("matrix n={n}"));
    }

    let outcome = Outcome {
        properties: vec![
            main_theorem,
            null_vertex,
            avoiding,
            corollaries,
            oracle_agreement,
            join,
            entry_parity,
        ],
    };
    for p in &outcome.properties {
        println!("{}: {}/{} passed", p.name, p.passed, p.total);
    }
    if let Some(p) = outcome
        .properties
        .iter()
        .find(|p| p.first_counterexample.is_some())
    {
        println!(
            "FAILED: {}, counterexample: {}",
            p.name,
            p.first_counterexample.as_deref().unwrap()
        );
    } else {
        println!("all properties passed");
    }
    outcome
}
