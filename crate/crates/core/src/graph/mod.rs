//! Simple undirected graphs with a fixed vertex order.
//!
//! Vertex `i` corresponds to row/column `i` of the closed-neighborhood
//! matrix; the order is part of the value. Indices are 0-based in code
//! and 1-based in the file formats.

mod formats;
mod generators;
mod vertex_set;

pub use formats::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, GraphParseError};
pub use generators::{complete, cycle, empty, path, random_gnp, random_tree, star};
pub use vertex_set::VertexSet;

use crate::gf2::{Gf2Matrix, Gf2Vector};

/// A simple labeled graph: irreflexive, symmetric adjacency stored as
/// one neighbor bitset per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Gf2Vector>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn with_vertices(n: usize) -> Self {
        Self {
            n,
            adj: vec![Gf2Vector::zeros(n); n],
        }
    }

    /// Builds a graph from an edge list of 0-based pairs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::with_vertices(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Inserts the edge `{u, v}`. Self-loops are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "vertex index out of range");
        assert_ne!(u, v, "self-loops are not allowed in a simple graph");
        self.adj[u].set(v, true);
        self.adj[v].set(u, true);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex index out of range");
        u != v && self.adj[u].get(v)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].support()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Gf2Vector::count_ones).sum::<usize>() / 2
    }

    /// Edges as 0-based pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The closed-neighborhood matrix N = A + I; always symmetric with
    /// unit diagonal.
    pub fn closed_neighborhood_matrix(&self) -> Gf2Matrix {
        let mut rows = Vec::with_capacity(self.n);
        for (i, nbrs) in self.adj.iter().enumerate() {
            let mut row = nbrs.clone();
            row.set(i, true);
            rows.push(row);
        }
        if self.n == 0 {
            Gf2Matrix::zeros(0, 0)
        } else {
            Gf2Matrix::from_rows(rows)
        }
    }

    /// Removes vertex `v` and its incident edges; vertices above `v`
    /// shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        assert!(v < self.n, "vertex index out of range");
        let map = |u: usize| if u > v { u - 1 } else { u };
        let mut g = Graph::with_vertices(self.n - 1);
        for (u, w) in self.edges() {
            if u != v && w != v {
                g.add_edge(map(u), map(w));
            }
        }
        g
    }

    /// Join of the parts: disjoint union plus every cross-part edge.
    /// Vertex order is the concatenation of the parts' orders.
    pub fn join(parts: &[Graph]) -> Graph {
        assert!(!parts.is_empty(), "join requires at least one part");
        let total: usize = parts.iter().map(|g| g.n).sum();
        let mut g = Graph::with_vertices(total);
        let mut offset = 0;
        for part in parts {
            for (u, v) in part.edges() {
                g.add_edge(offset + u, offset + v);
            }
            offset += part.n;
        }
        // cross edges between distinct parts
        let mut start_a = 0;
        for (a, pa) in parts.iter().enumerate() {
            let mut start_b = start_a + pa.n;
            for pb in &parts[a + 1..] {
                for u in 0..pa.n {
                    for v in 0..pb.n {
                        g.add_edge(start_a + u, start_b + v);
                    }
                }
                start_b += pb.n;
            }
            start_a += pa.n;
        }
        g
    }

    /// The set of vertices with odd degree.
    pub fn degree_parity_profile(&self) -> VertexSet {
        let mut d = VertexSet::empty(self.n);
        for v in 0..self.n {
            if self.degree(v) % 2 == 1 {
                d.insert(v);
            }
        }
        d
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
