//! Gaussian elimination over GF(2): reduced row-echelon form, rank,
//! canonical solving, inversion, and a random invertible-matrix generator.
//!
//! Elimination works on whole packed rows with word-wide XOR. Plain
//! Gaussian elimination is intentional; the target sizes do not warrant
//! block methods.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::Gf2Matrix;
use super::vector::Gf2Vector;

/// Outcome of [`rref`]: the reduced form plus everything elimination
/// learns along the way.
#[derive(Clone, Debug)]
pub struct RrefResult {
    /// Reduced row-echelon form of the input; same row space.
    pub rref: Gf2Matrix,
    /// Pivot column indices, strictly increasing.
    pub pivot_cols: Vec<usize>,
    /// Rank = number of pivots.
    pub rank: usize,
    /// Standard free-variable kernel basis: one vector per non-pivot
    /// column, with a 1 in that free column.
    pub kernel_basis: Vec<Gf2Vector>,
}

/// Reduced row-echelon form with pivot bookkeeping and kernel basis.
pub fn rref(m: &Gf2Matrix) -> RrefResult {
    let mut work = m.clone();
    let (rows, cols) = (work.rows(), work.cols());
    let mut pivot_cols = Vec::new();
    let mut pivot_row = 0usize;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        let Some(src) = (pivot_row..rows).find(|&r| work.get(r, col)) else {
            continue;
        };
        work.swap_rows(pivot_row, src);
        // clear the pivot column everywhere else
        for r in 0..rows {
            if r != pivot_row && work.get(r, col) {
                let (dst, piv) = work.row_mut_pair(r, pivot_row);
                *dst ^= piv;
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
    }
    let rank = pivot_cols.len();
    let kernel_basis = kernel_from_rref(&work, &pivot_cols);
    RrefResult {
        rref: work,
        pivot_cols,
        rank,
        kernel_basis,
    }
}

fn kernel_from_rref(rref: &Gf2Matrix, pivot_cols: &[usize]) -> Vec<Gf2Vector> {
    let cols = rref.cols();
    let mut is_pivot = vec![false; cols];
    for &p in pivot_cols {
        is_pivot[p] = true;
    }
    let mut basis = Vec::with_capacity(cols - pivot_cols.len());
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = Gf2Vector::zeros(cols);
        v.set(free, true);
        for (row, &p) in pivot_cols.iter().enumerate() {
            if rref.get(row, free) {
                v.set(p, true);
            }
        }
        basis.push(v);
    }
    basis
}

impl Gf2Matrix {
    // Two disjoint mutable row references; needed to XOR one row into another.
    fn row_mut_pair(&mut self, dst: usize, src: usize) -> (&mut Gf2Vector, &Gf2Vector) {
        assert_ne!(dst, src);
        let src_ptr = self.row(src) as *const Gf2Vector;
        let dst_ref = self.row_mut(dst);
        // SAFETY: dst != src, distinct elements of the row vec.
        (dst_ref, unsafe { &*src_ptr })
    }
}

/// Rank via forward elimination only (no back-substitution); the cheap
/// path used for large matrices.
pub fn rank(m: &Gf2Matrix) -> usize {
    let mut work = m.clone();
    let (rows, cols) = (work.rows(), work.cols());
    let mut pivot_row = 0usize;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        let Some(src) = (pivot_row..rows).find(|&r| work.get(r, col)) else {
            continue;
        };
        work.swap_rows(pivot_row, src);
        for r in pivot_row + 1..rows {
            if work.get(r, col) {
                let (dst, piv) = work.row_mut_pair(r, pivot_row);
                *dst ^= piv;
            }
        }
        pivot_row += 1;
    }
    pivot_row
}

/// Solves `M x = b` over GF(2). Returns the canonical particular
/// solution (all free variables zero) or `None` when `b` is outside the
/// column space.
pub fn solve(m: &Gf2Matrix, b: &Gf2Vector) -> Option<Gf2Vector> {
    assert_eq!(
        m.rows(),
        b.len(),
        "solve: right-hand side length {} does not match {} rows",
        b.len(),
        m.rows()
    );
    let cols = m.cols();
    let augmented = if m.rows() == 0 {
        Gf2Matrix::zeros(0, cols + 1)
    } else {
        Gf2Matrix::from_rows(
            (0..m.rows())
                .map(|i| m.row(i).concat(&Gf2Vector::from_bits(&[b.get(i)])))
                .collect(),
        )
    };
    let result = rref(&augmented);
    if result.pivot_cols.last() == Some(&cols) {
        return None; // inconsistent: pivot in the augmented column
    }
    let mut x = Gf2Vector::zeros(cols);
    for (row, &p) in result.pivot_cols.iter().enumerate() {
        if result.rref.get(row, cols) {
            x.set(p, true);
        }
    }
    Some(x)
}

/// Inverse of a square matrix, or `None` when singular.
pub fn invert(m: &Gf2Matrix) -> Option<Gf2Matrix> {
    assert_eq!(m.rows(), m.cols(), "invert requires a square matrix");
    let n = m.rows();
    if n == 0 {
        return Some(Gf2Matrix::zeros(0, 0));
    }
    let identity = Gf2Matrix::identity(n);
    let augmented = Gf2Matrix::from_rows(
        (0..n)
            .map(|i| m.row(i).concat(identity.row(i)))
            .collect(),
    );
    let result = rref(&augmented);
    // invertible iff the pivots are exactly the left-half columns
    if result.pivot_cols.len() != n || result.pivot_cols[n - 1] != n - 1 {
        return None;
    }
    let mut inv = Gf2Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if result.rref.get(i, n + j) {
                inv.set(i, j, true);
            }
        }
    }
    Some(inv)
}

/// Deterministic generator of random symmetric invertible matrices with
/// unit diagonal: draw the strict upper triangle, mirror it, retry with
/// seed+1 while singular (bounded at 1000 attempts).
pub fn random_symmetric_unit_diagonal_invertible(n: usize, seed: u64) -> Gf2Matrix {
    assert!(n >= 1, "matrix order must be at least 1");
    for attempt in 0..1000u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt));
        let mut m = Gf2Matrix::identity(n);
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen::<bool>() {
                    m.set(i, j, true);
                    m.set(j, i, true);
                }
            }
        }
        if rank(&m) == n {
            return m;
        }
    }
    panic!("no invertible symmetric unit-diagonal matrix found after 1000 attempts (n={n})");
}
