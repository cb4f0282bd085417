//! Property tests for the GF(2) core and the graph layer.

use proptest::prelude::*;

use paritydom::gf2::{self, Gf2Matrix, Gf2Vector};
use paritydom::graph::{self, Graph, VertexSet};
use paritydom::{domination, oracle};

fn matrix_strategy(max_dim: usize) -> impl Strategy<Value = Gf2Matrix> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), c), r)
            .prop_map(move |rows| {
                let mut m = Gf2Matrix::zeros(rows.len(), c);
                for (i, row) in rows.iter().enumerate() {
                    for (j, &b) in row.iter().enumerate() {
                        m.set(i, j, b);
                    }
                }
                m
            })
    })
}

fn square_matrix_strategy(max_dim: usize) -> impl Strategy<Value = Gf2Matrix> {
    (1..=max_dim).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let mut m = Gf2Matrix::zeros(n, n);
            for (k, &b) in bits.iter().enumerate() {
                m.set(k / n, k % n, b);
            }
            m
        })
    })
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .zip(&bits)
                .filter(|&(_, &b)| b)
                .map(|(&e, _)| e)
                .collect();
            Graph::from_edges(n, &edges)
        })
    })
}

/// All vectors of the given length; usable only for small lengths.
fn all_vectors(len: usize) -> Vec<Gf2Vector> {
    assert!(len <= 12);
    (0u32..1 << len)
        .map(|mask| {
            let bits: Vec<bool> = (0..len).map(|i| mask >> i & 1 == 1).collect();
            Gf2Vector::from_bits(&bits)
        })
        .collect()
}

/// The coset {particular + span(kernel_basis)} as an explicit list.
fn solution_coset(particular: &Gf2Vector, kernel_basis: &[Gf2Vector]) -> Vec<Gf2Vector> {
    assert!(kernel_basis.len() <= 16);
    (0u32..1 << kernel_basis.len())
        .map(|mask| {
            let mut v = particular.clone();
            for (i, b) in kernel_basis.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    v ^= b;
                }
            }
            v
        })
        .collect()
}

proptest! {
    #[test]
    fn rank_nullity(m in matrix_strategy(8)) {
        let r = gf2::rref(&m);
        prop_assert_eq!(r.rank + r.kernel_basis.len(), m.cols());
        prop_assert_eq!(r.rank, r.pivot_cols.len());
        prop_assert!(r.pivot_cols.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(gf2::rank(&m), r.rank);
        for v in &r.kernel_basis {
            prop_assert!(m.mul_vector(v).is_zero());
        }
    }

    #[test]
    fn solve_soundness_and_completeness(m in matrix_strategy(6), seed in any::<u32>()) {
        // pick b from the enumerated candidates so both branches occur
        let candidates = all_vectors(m.rows());
        let b = &candidates[seed as usize % candidates.len()];
        let by_enumeration: Vec<Gf2Vector> = all_vectors(m.cols())
            .into_iter()
            .filter(|x| &m.mul_vector(x) == b)
            .collect();
        match gf2::solve(&m, b) {
            Some(x) => {
                prop_assert_eq!(&m.mul_vector(&x), b);
                // canonical: free variables are all zero
                let r = gf2::rref(&m);
                for c in 0..m.cols() {
                    if !r.pivot_cols.contains(&c) {
                        prop_assert!(!x.get(c));
                    }
                }
                // full solution set = particular + kernel span
                let mut coset = solution_coset(&x, &r.kernel_basis);
                let mut expected = by_enumeration;
                coset.sort_by_key(|v| format!("{v}"));
                expected.sort_by_key(|v| format!("{v}"));
                prop_assert_eq!(coset, expected);
            }
            None => prop_assert!(by_enumeration.is_empty()),
        }
    }

    #[test]
    fn inverse_correctness(m in square_matrix_strategy(7)) {
        let n = m.rows();
        match gf2::invert(&m) {
            Some(inv) => {
                prop_assert_eq!(m.mul(&inv), Gf2Matrix::identity(n));
                prop_assert_eq!(inv.mul(&m), Gf2Matrix::identity(n));
            }
            None => prop_assert!(gf2::rank(&m) < n),
        }
    }

    #[test]
    fn symmetric_invertible_entry_parity(n in 1usize..=32, seed in any::<u64>()) {
        let a = gf2::random_symmetric_unit_diagonal_invertible(n, seed);
        let inv = gf2::invert(&a).unwrap();
        prop_assert_eq!(a.entry_sum_parity(), n % 2 == 1);
        prop_assert_eq!(inv.entry_sum_parity(), n % 2 == 1);
    }

    #[test]
    fn neighborhood_matrix_shape(g in graph_strategy(10)) {
        let n = g.closed_neighborhood_matrix();
        prop_assert!(n.is_symmetric_unit_diagonal());
        // N * 1 is the characteristic vector of the even-degree vertices
        let product = n.mul_vector(&Gf2Vector::ones(g.vertex_count()));
        let even_degrees = g.degree_parity_profile().complement();
        prop_assert_eq!(VertexSet::from_vector(product), even_degrees);
    }

    #[test]
    fn delete_vertex_commutes(g in graph_strategy(9), v in 0usize..9) {
        prop_assume!(v < g.vertex_count());
        prop_assert_eq!(
            g.delete_vertex(v).closed_neighborhood_matrix(),
            g.closed_neighborhood_matrix().delete_row_col(v)
        );
    }

    #[test]
    fn format_round_trips(g in graph_strategy(12)) {
        prop_assert_eq!(&graph::parse_edge_list(&graph::emit_edge_list(&g)).unwrap(), &g);
        prop_assert_eq!(&graph::parse_graph6(&graph::emit_graph6(&g)).unwrap(), &g);
    }

    #[test]
    fn matrix_text_round_trip(m in matrix_strategy(9)) {
        prop_assume!(m.rows() > 0);
        prop_assert_eq!(Gf2Matrix::from_text(&m.to_text()).unwrap(), m);
    }

    #[test]
    fn oracle_agrees_with_solver(g in graph_strategy(8)) {
        let canonical = domination::odd_dominating_set(&g);
        let kernel: Vec<Gf2Vector> = domination::even_dominating_basis(&g)
            .iter()
            .map(VertexSet::to_vector)
            .collect();
        let mut coset: Vec<VertexSet> = solution_coset(&canonical.to_vector(), &kernel)
            .into_iter()
            .map(VertexSet::from_vector)
            .collect();
        let mut oracle_sets = oracle::enumerate_odd_dominating(&g, oracle::DEFAULT_LIMIT);
        let key = |s: &VertexSet| s.iter().collect::<Vec<_>>();
        coset.sort_by_key(key);
        oracle_sets.sort_by_key(key);
        prop_assert_eq!(coset, oracle_sets);
        prop_assert_eq!(
            oracle::enumerate_even_dominating(&g, oracle::DEFAULT_LIMIT).len(),
            1usize << domination::nullity(&g)
        );
    }

    #[test]
    fn odd_dominating_cardinalities_share_parity(g in graph_strategy(8)) {
        let sets = oracle::enumerate_odd_dominating(&g, oracle::DEFAULT_LIMIT);
        prop_assert!(!sets.is_empty());
        let parity = sets[0].len() % 2;
        prop_assert!(sets.iter().all(|s| s.len() % 2 == parity));
        // and that parity is the rank parity
        prop_assert_eq!(parity == 1, domination::rank_of(&g) % 2 == 1);
    }

    #[test]
    fn null_vertices_match_null_difference(g in graph_strategy(8)) {
        prop_assume!(g.vertex_count() >= 1);
        let nulls = domination::null_vertices(&g);
        for v in 0..g.vertex_count() {
            let nd = domination::null_difference(&g, v);
            prop_assert!((-1..=1).contains(&nd));
            prop_assert_eq!(nulls.contains(v), nd == -1);
        }
    }

    #[test]
    fn avoiding_construction_is_sound(g in graph_strategy(8)) {
        let nulls = domination::null_vertices(&g);
        let n_matrix = g.closed_neighborhood_matrix();
        for v in nulls.iter() {
            let s = domination::odd_dominating_avoiding(&g, v).unwrap();
            prop_assert!(!s.contains(v));
            prop_assert_eq!(
                n_matrix.mul_vector(&s.to_vector()),
                Gf2Vector::ones(g.vertex_count())
            );
        }
    }

    #[test]
    fn join_formula_matches_direct(parts in proptest::collection::vec(graph_strategy(5), 1..=4)) {
        let analysis = domination::analyze_join(&parts);
        prop_assert_eq!(analysis.predicted_nullity, analysis.direct_nullity);
        if parts.len() == 2 {
            let (_, r1, nu1) = analysis.parts[0];
            let (_, r2, nu2) = analysis.parts[1];
            prop_assert_eq!(
                domination::join_nullity_pairwise(nu1, r1, nu2, r2),
                analysis.direct_nullity
            );
        }
    }
}

#[test]
fn null_vertices_against_full_even_dominating_enumeration() {
    // union of supports of *all* even dominating sets, not just the basis
    for seed in 0..40u64 {
        let g = graph::random_gnp(9, 0.4, seed);
        let mut union = VertexSet::empty(9);
        for s in oracle::enumerate_even_dominating(&g, oracle::DEFAULT_LIMIT) {
            for v in s.iter() {
                union.insert(v);
            }
        }
        assert_eq!(union, domination::null_vertices(&g), "seed {seed}");
    }
}
