//! Shared helpers for the GF(2) benchmarks.

use paritydom::gf2::{Gf2Matrix, Gf2Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Dense uniformly random matrix, deterministic in the seed.
pub fn random_matrix(rows: usize, cols: usize, seed: u64) -> Gf2Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = Gf2Matrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            if rng.gen::<bool>() {
                m.set(i, j, true);
            }
        }
    }
    m
}

/// Uniformly random vector, deterministic in the seed.
pub fn random_vector(len: usize, seed: u64) -> Gf2Vector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v = Gf2Vector::zeros(len);
    for i in 0..len {
        if rng.gen::<bool>() {
            v.set(i, true);
        }
    }
    v
}
