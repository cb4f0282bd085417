//! Brute-force reference implementations.
//!
//! Everything here works by exhaustive subset enumeration and plain
//! integer counting over closed neighborhoods. The linear-algebra path
//! in [`crate::gf2`] is deliberately never consulted, so these results
//! can stand as independent oracles for it.

use crate::graph::{Graph, VertexSet};

/// Default enumeration bound; sweeps stay under a second.
pub const DEFAULT_LIMIT: usize = 12;
/// Hard cap on the order for exhaustive enumeration.
pub const HARD_CAP: usize = 20;

fn closed_neighborhood_masks(g: &Graph) -> Vec<u32> {
    (0..g.vertex_count())
        .map(|u| {
            let mut mask = 1u32 << u;
            for v in g.neighbors(u) {
                mask |= 1 << v;
            }
            mask
        })
        .collect()
}

fn enumerate_with_parity(g: &Graph, limit: usize, want_odd: bool) -> Vec<VertexSet> {
    let n = g.vertex_count();
    assert!(limit <= HARD_CAP, "enumeration limit {limit} above hard cap {HARD_CAP}");
    assert!(n <= limit, "graph order {n} above enumeration limit {limit}");
    let neighborhoods = closed_neighborhood_masks(g);
    let mut found: Vec<u32> = Vec::new();
    for subset in 0u32..(1u32 << n) {
        let ok = neighborhoods
            .iter()
            .all(|&nb| ((nb & subset).count_ones() % 2 == 1) == want_odd);
        if ok {
            found.push(subset);
        }
    }
    // deterministic order: by cardinality, then bitmask
    found.sort_by_key(|&m| (m.count_ones(), m));
    found
        .into_iter()
        .map(|mask| {
            let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            VertexSet::from_indices(n, &members)
        })
        .collect()
}

/// All odd dominating sets of `g`, by checking |N[u] ∩ S| odd for every
/// vertex on every subset.
pub fn enumerate_odd_dominating(g: &Graph, limit: usize) -> Vec<VertexSet> {
    enumerate_with_parity(g, limit, true)
}

/// All even dominating sets of `g`; always contains the empty set.
pub fn enumerate_even_dominating(g: &Graph, limit: usize) -> Vec<VertexSet> {
    enumerate_with_parity(g, limit, false)
}

/// Every labeled simple graph on `n <= 5` vertices, exactly once,
/// ordered by the upper-triangle adjacency bitmask.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 5, "use all_labeled_graphs_extended for n = 6");
    all_labeled_graphs_extended(n, false)
}

/// As [`all_labeled_graphs`], with an explicit opt-in for n = 6
/// (32768 graphs).
pub fn all_labeled_graphs_extended(n: usize, allow_n6: bool) -> impl Iterator<Item = Graph> {
    let cap = if allow_n6 { 6 } else { 5 };
    assert!(n <= cap, "graph order {n} above enumeration cap {cap}");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges)
    })
}
