//! Vertex subsets as characteristic vectors.

use std::fmt;

use crate::gf2::Gf2Vector;

/// A subset of the vertices of a fixed universe `{0, ..., n-1}`,
/// stored as its characteristic vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: Gf2Vector,
}

impl VertexSet {
    pub fn empty(universe_size: usize) -> Self {
        Self {
            bits: Gf2Vector::zeros(universe_size),
        }
    }

    pub fn full(universe_size: usize) -> Self {
        Self {
            bits: Gf2Vector::ones(universe_size),
        }
    }

    pub fn from_indices(universe_size: usize, members: &[usize]) -> Self {
        Self {
            bits: Gf2Vector::from_support(universe_size, members),
        }
    }

    /// Reinterprets a GF(2) vector as its support set.
    pub fn from_vector(v: Gf2Vector) -> Self {
        Self { bits: v }
    }

    /// The characteristic vector of the set.
    pub fn to_vector(&self) -> Gf2Vector {
        self.bits.clone()
    }

    pub fn universe_size(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_zero()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.get(v)
    }

    pub fn insert(&mut self, v: usize) {
        self.bits.set(v, true);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.set(v, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.support()
    }

    /// Symmetric difference; on characteristic vectors this is addition.
    pub fn symmetric_difference(&self, other: &Self) -> Self {
        Self {
            bits: &self.bits ^ &other.bits,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.universe_size(), other.universe_size());
        let mut out = Self::empty(self.universe_size());
        for v in self.iter() {
            if other.contains(v) {
                out.insert(v);
            }
        }
        out
    }

    pub fn complement(&self) -> Self {
        Self {
            bits: &self.bits ^ &Gf2Vector::ones(self.bits.len()),
        }
    }

    /// Members as 1-based indices, ascending; the file/CLI convention.
    pub fn to_one_based(&self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
