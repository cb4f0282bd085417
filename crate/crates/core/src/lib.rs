//! Parity domination on simple graphs over GF(2).
//!
//! The crate has four layers:
//!
//! - [`gf2`]: dense bit-packed linear algebra over the two-element
//!   field (elimination, rank, kernel, solving, inversion).
//! - [`graph`]: simple labeled graphs, closed-neighborhood matrices,
//!   joins, generators, and the edge-list / graph6 file formats.
//! - [`domination`]: odd/even dominating sets, C-parity solving,
//!   nullity and rank of a graph, null vertices and null differences,
//!   the odd-dominating-set parity identity, and join-nullity formulas.
//! - [`oracle`]: independent brute-force reference implementations used
//!   to validate the linear-algebra path.

pub mod domination;
pub mod gf2;
pub mod graph;
pub mod oracle;

pub use domination::{
    analyze_join, corollary_suite, even_dominating_basis, join_nullity_mary,
    join_nullity_pairwise, null_difference, null_vertices, nullity, odd_degree_intersection_parity,
    odd_dominating_avoiding, odd_dominating_set, parity_theorem_check, rank_of, solve_parity,
    CorollaryCheck, DominationError, DominationReport, JoinAnalysis, ParitySolution,
};
pub use gf2::{Gf2Matrix, Gf2Vector};
pub use graph::{Graph, VertexSet};
