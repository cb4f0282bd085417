//! Exact dense linear algebra over GF(2) with word-packed rows.

mod elim;
mod matrix;
mod vector;

pub use elim::{invert, random_symmetric_unit_diagonal_invertible, rank, rref, solve, RrefResult};
pub use matrix::{Gf2Matrix, MatrixParseError};
pub use vector::Gf2Vector;
