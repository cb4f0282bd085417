//! Deterministic graph generators for the test corpus.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;

/// Path v1 - v2 - ... - vn.
pub fn path(n: usize) -> Graph {
    assert!(n >= 1, "path requires n >= 1");
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges)
}

/// Cycle on n >= 3 vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle requires n >= 3");
    let mut g = path(n);
    g.add_edge(n - 1, 0);
    g
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Graph {
    assert!(n >= 1, "complete requires n >= 1");
    let mut g = Graph::with_vertices(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// Star on n vertices: v1 is the center, v2..vn are leaves (K_{1,n-1}).
pub fn star(n: usize) -> Graph {
    assert!(n >= 1, "star requires n >= 1");
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::from_edges(n, &edges)
}

/// Edgeless graph on n vertices.
pub fn empty(n: usize) -> Graph {
    assert!(n >= 1, "empty requires n >= 1");
    Graph::with_vertices(n)
}

/// Erdos-Renyi G(n, p), deterministic in the seed.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    assert!(n >= 1, "random_gnp requires n >= 1");
    assert!((0.0..=1.0).contains(&p), "probability out of range");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::with_vertices(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random labeled tree by random attachment: each new vertex picks a
/// uniformly random earlier vertex as its parent.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    assert!(n >= 1, "random_tree requires n >= 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::with_vertices(n);
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        g.add_edge(parent, v);
    }
    g
}
