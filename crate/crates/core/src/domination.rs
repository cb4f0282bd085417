//! Parity domination on graphs: C-parity solving, odd/even dominating
//! sets, nullity and rank, null vertices, null differences, the
//! odd-dominating-set parity identity, and join-nullity formulas.
//!
//! Theorem-level identities are asserted inside the constructors: a
//! violation is an implementation bug, not a user error, and must fail
//! hard so tests see it immediately.

use thiserror::Error;

use crate::gf2::{self, Gf2Vector};
use crate::graph::{Graph, VertexSet};

/// Parity of a count: false for even, true for odd.
pub fn pr(a: usize) -> bool {
    a % 2 == 1
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DominationError {
    /// The vertex belongs to no even dominating set, so no odd
    /// dominating set can avoid it.
    #[error("vertex {0} is not a null vertex; every odd dominating set contains it")]
    NotNullVertex(usize),
}

/// Outcome of solving N(G) x = x_C for a target set C.
#[derive(Clone, Debug)]
pub struct ParitySolution {
    pub target: VertexSet,
    /// Canonical C-parity set (free variables zero), if C is solvable.
    pub solution: Option<VertexSet>,
    /// Dimension of the kernel of N(G).
    pub nullity: usize,
}

/// Per-graph summary of every parity-domination quantity.
#[derive(Clone, Debug)]
pub struct DominationReport {
    pub order: usize,
    pub rank: usize,
    pub nullity: usize,
    /// Canonical odd dominating set.
    pub odd_dominating: VertexSet,
    /// pr(|S|) for the canonical S.
    pub odd_parity: bool,
    /// pr(rank).
    pub rank_parity: bool,
    pub null_vertices: VertexSet,
    /// nd(v) per vertex, each in {-1, 0, 1}.
    pub null_differences: Vec<i8>,
    /// pr(|D intersect S|) where D is the odd-degree vertex set.
    pub odd_degree_intersection_parity: bool,
    pub always_solvable: bool,
}

/// Join analysis: the formula prediction against the directly computed
/// nullity of the constructed join.
#[derive(Clone, Debug)]
pub struct JoinAnalysis {
    /// Per part: (order, rank, nullity).
    pub parts: Vec<(usize, usize, usize)>,
    /// Number of parts with odd rank.
    pub odd_rank_count: usize,
    pub predicted_nullity: usize,
    pub direct_nullity: usize,
}

/// One corollary verdict; inapplicable hypotheses report vacuously true.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryCheck {
    pub id: &'static str,
    pub applicable: bool,
    pub holds: bool,
}

/// Solves N(G) x_S = x_C. The solution, when present, is the canonical
/// one with all free variables zero.
pub fn solve_parity(g: &Graph, target: &VertexSet) -> ParitySolution {
    assert_eq!(
        target.universe_size(),
        g.vertex_count(),
        "target universe does not match graph order"
    );
    let n_matrix = g.closed_neighborhood_matrix();
    let solution = gf2::solve(&n_matrix, &target.to_vector()).map(VertexSet::from_vector);
    ParitySolution {
        target: target.clone(),
        solution,
        nullity: nullity(g),
    }
}

/// The canonical odd dominating set: the canonical solution of
/// N(G) x = 1. Exists for every graph; failure to find one is an
/// implementation bug.
pub fn odd_dominating_set(g: &Graph) -> VertexSet {
    let all = VertexSet::full(g.vertex_count());
    solve_parity(g, &all)
        .solution
        .expect("internal invariant violated: every graph has an odd dominating set")
}

/// Kernel basis of N(G) as vertex sets; empty iff G is always solvable.
pub fn even_dominating_basis(g: &Graph) -> Vec<VertexSet> {
    gf2::rref(&g.closed_neighborhood_matrix())
        .kernel_basis
        .into_iter()
        .map(VertexSet::from_vector)
        .collect()
}

/// Dimension of the kernel of N(G).
pub fn nullity(g: &Graph) -> usize {
    g.vertex_count() - rank_of(g)
}

/// Dimension of the column space of N(G).
pub fn rank_of(g: &Graph) -> usize {
    gf2::rank(&g.closed_neighborhood_matrix())
}

/// Vertices belonging to some even dominating set. A vertex lies in
/// some kernel element iff it lies in some kernel *basis* element, so
/// this is the union of the basis supports.
pub fn null_vertices(g: &Graph) -> VertexSet {
    let mut acc = Gf2Vector::zeros(g.vertex_count());
    for basis_vec in gf2::rref(&g.closed_neighborhood_matrix()).kernel_basis {
        for v in basis_vec.support() {
            acc.set(v, true);
        }
    }
    VertexSet::from_vector(acc)
}

/// Null difference nd(v) = nullity(G - v) - nullity(G); always in
/// {-1, 0, 1}.
pub fn null_difference(g: &Graph, v: usize) -> i8 {
    assert!(v < g.vertex_count(), "vertex index out of range");
    let nd = nullity(&g.delete_vertex(v)) as i64 - nullity(g) as i64;
    assert!(
        (-1..=1).contains(&nd),
        "null difference {nd} outside {{-1, 0, 1}}"
    );
    nd as i8
}

/// An odd dominating set that avoids `v`, which must be a null vertex.
/// Construction: take the canonical set S1; if it contains v, add an
/// even dominating set R containing v, giving the symmetric difference
/// S1 with R.
pub fn odd_dominating_avoiding(g: &Graph, v: usize) -> Result<VertexSet, DominationError> {
    assert!(v < g.vertex_count(), "vertex index out of range");
    let basis = even_dominating_basis(g);
    if !basis.iter().any(|b| b.contains(v)) {
        return Err(DominationError::NotNullVertex(v));
    }
    let s1 = odd_dominating_set(g);
    if !s1.contains(v) {
        return Ok(s1);
    }
    let r = basis
        .into_iter()
        .find(|b| b.contains(v))
        .expect("checked above");
    let s2 = s1.symmetric_difference(&r);
    debug_assert!(!s2.contains(v));
    Ok(s2)
}

/// Builds the full report; every identity the report carries is checked
/// during construction.
pub fn parity_theorem_check(g: &Graph) -> DominationReport {
    let order = g.vertex_count();
    assert!(order >= 1, "report requires a non-empty graph");
    let rank = rank_of(g);
    let nullity = order - rank;
    let odd_dominating = odd_dominating_set(g);
    let odd_parity = pr(odd_dominating.len());
    let rank_parity = pr(rank);
    assert_eq!(
        odd_parity, rank_parity,
        "parity identity pr(|S|) = pr(rank) violated; implementation bug"
    );
    // equivalent complement form: pr(n - |S|) = pr(nullity)
    assert_eq!(pr(order - odd_dominating.len()), pr(nullity));
    let null_vertices = null_vertices(g);
    let null_differences: Vec<i8> = (0..order).map(|v| null_difference(g, v)).collect();
    let odd_degree_intersection_parity = odd_degree_intersection_parity(g);
    let always_solvable = nullity == 0;
    DominationReport {
        order,
        rank,
        nullity,
        odd_dominating,
        odd_parity,
        rank_parity,
        null_vertices,
        null_differences,
        odd_degree_intersection_parity,
        always_solvable,
    }
}

/// pr(|D intersect S|) for the odd-degree vertex set D and the canonical
/// odd dominating S; equals pr(nullity) and is asserted to.
pub fn odd_degree_intersection_parity(g: &Graph) -> bool {
    let d = g.degree_parity_profile();
    let s = odd_dominating_set(g);
    let parity = pr(d.intersection(&s).len());
    assert_eq!(
        parity,
        pr(nullity(g)),
        "odd-degree intersection parity identity violated; implementation bug"
    );
    parity
}

/// Nullity of the join of two graphs from their nullities and ranks:
/// nu1 + nu2 + pr(rho1 * rho2).
pub fn join_nullity_pairwise(nu1: usize, rho1: usize, nu2: usize, rho2: usize) -> usize {
    nu1 + nu2 + usize::from(pr(rho1) && pr(rho2))
}

/// Nullity of an m-ary join from per-part (nullity, rank) pairs. With
/// j parts of odd rank: sum of nullities, plus j - 1 when j > 0.
pub fn join_nullity_mary(parts: &[(usize, usize)]) -> usize {
    assert!(!parts.is_empty(), "join requires at least one part");
    let total: usize = parts.iter().map(|&(nu, _)| nu).sum();
    let odd_rank_count = parts.iter().filter(|&&(_, rho)| pr(rho)).count();
    if odd_rank_count == 0 {
        total
    } else {
        total + odd_rank_count - 1
    }
}

/// Builds the join of the parts, computes its nullity directly, and
/// checks the formula prediction against it.
pub fn analyze_join(parts: &[Graph]) -> JoinAnalysis {
    assert!(!parts.is_empty(), "join requires at least one part");
    let part_stats: Vec<(usize, usize, usize)> = parts
        .iter()
        .map(|g| {
            let rho = rank_of(g);
            (g.vertex_count(), rho, g.vertex_count() - rho)
        })
        .collect();
    let odd_rank_count = part_stats.iter().filter(|&&(_, rho, _)| pr(rho)).count();
    let predicted_nullity =
        join_nullity_mary(&part_stats.iter().map(|&(_, rho, nu)| (nu, rho)).collect::<Vec<_>>());
    let direct_nullity = nullity(&Graph::join(parts));
    assert_eq!(
        predicted_nullity, direct_nullity,
        "join nullity formula disagrees with direct computation; implementation bug"
    );
    JoinAnalysis {
        parts: part_stats,
        odd_rank_count,
        predicted_nullity,
        direct_nullity,
    }
}

/// Evaluates each corollary whose hypothesis applies to `g`.
///
/// - `C1`: always-solvable graphs — |S| has the parity of n.
/// - `C2`: all degrees even — nullity is even.
/// - `C3`: trees with at most one even-degree vertex — |S| is odd.
/// - `C4`: pr(|D intersect S|) = pr(nullity), unconditionally.
pub fn corollary_suite(g: &Graph) -> Vec<CorollaryCheck> {
    let n = g.vertex_count();
    let nu = nullity(g);
    let s = odd_dominating_set(g);
    let even_degree_count = n - g.degree_parity_profile().len();
    let is_tree = n >= 1 && g.edge_count() == n - 1 && g.is_connected();

    let mut checks = Vec::with_capacity(4);
    let mut push = |id, applicable: bool, conclusion: bool| {
        checks.push(CorollaryCheck {
            id,
            applicable,
            holds: !applicable || conclusion,
        });
    };
    push("C1", nu == 0, pr(s.len()) == pr(n));
    push("C2", g.degree_parity_profile().is_empty(), !pr(nu));
    push("C3", is_tree && even_degree_count <= 1, pr(s.len()));
    push("C4", true, odd_degree_intersection_parity(g) == pr(nu));
    checks
}
