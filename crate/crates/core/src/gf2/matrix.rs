//! Dense bit-packed matrices over GF(2).

use std::fmt;

use thiserror::Error;

use super::vector::Gf2Vector;

/// Row-major dense matrix over GF(2); each row is a packed [`Gf2Vector`]
/// of length `cols`. 0x0 and 0xN matrices are legal.
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: Vec<Gf2Vector>,
    cols: usize,
}

/// Parse failure for the matrix text format.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixParseError {
    #[error("missing or malformed header, expected \"R C\"")]
    BadHeader,
    #[error("line {line}: expected {expected} characters, got {got}")]
    BadRowLength { line: usize, expected: usize, got: usize },
    #[error("line {line}: invalid character {ch:?}, expected '0' or '1'")]
    BadChar { line: usize, ch: char },
    #[error("expected {expected} rows, got {got}")]
    BadRowCount { expected: usize, got: usize },
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows: vec![Gf2Vector::zeros(cols); rows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// All-ones matrix.
    pub fn ones(rows: usize, cols: usize) -> Self {
        Self {
            rows: vec![Gf2Vector::ones(cols); rows],
            cols,
        }
    }

    pub fn from_rows(rows: Vec<Gf2Vector>) -> Self {
        let cols = rows.first().map_or(0, Gf2Vector::len);
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "rows of unequal length"
        );
        Self { rows, cols }
    }

    /// Builds a matrix from 0/1 literals; handy in tests.
    pub fn from_bits(bits: &[&[u8]]) -> Self {
        let rows = bits
            .iter()
            .map(|row| Gf2Vector::from_bits(&row.iter().map(|&b| b != 0).collect::<Vec<_>>()))
            .collect();
        Self::from_rows(rows)
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    pub fn row(&self, i: usize) -> &Gf2Vector {
        &self.rows[i]
    }

    pub(crate) fn row_mut(&mut self, i: usize) -> &mut Gf2Vector {
        &mut self.rows[i]
    }

    pub(crate) fn swap_rows(&mut self, i: usize, j: usize) {
        self.rows.swap(i, j);
    }

    /// Matrix-vector product over GF(2).
    pub fn mul_vector(&self, v: &Gf2Vector) -> Gf2Vector {
        assert_eq!(self.cols, v.len(), "dimension mismatch in mul_vector");
        let mut out = Gf2Vector::zeros(self.rows());
        for (i, row) in self.rows.iter().enumerate() {
            out.set(i, row.dot(v));
        }
        out
    }

    /// Matrix-matrix product over GF(2).
    pub fn mul(&self, other: &Gf2Matrix) -> Gf2Matrix {
        assert_eq!(self.cols, other.rows(), "dimension mismatch in mul");
        let mut out = Gf2Matrix::zeros(self.rows(), other.cols());
        for i in 0..self.rows() {
            for k in self.rows[i].support() {
                let row = out.row_mut(i);
                *row ^= other.row(k);
            }
        }
        out
    }

    /// XOR of all entries.
    pub fn entry_sum_parity(&self) -> bool {
        self.rows
            .iter()
            .fold(false, |acc, r| acc ^ r.parity())
    }

    /// True iff the matrix is square, symmetric, and has an all-ones
    /// diagonal. Closed-neighborhood matrices always satisfy this.
    pub fn is_symmetric_unit_diagonal(&self) -> bool {
        if self.rows() != self.cols {
            return false;
        }
        for i in 0..self.rows() {
            if !self.get(i, i) {
                return false;
            }
            for j in 0..i {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Removes row `i` and column `i` (principal submatrix on the rest).
    pub fn delete_row_col(&self, i: usize) -> Gf2Matrix {
        assert!(i < self.rows() && i < self.cols, "index out of range");
        let mut rows = Vec::with_capacity(self.rows() - 1);
        for (r, row) in self.rows.iter().enumerate() {
            if r == i {
                continue;
            }
            let mut v = Gf2Vector::zeros(self.cols - 1);
            for c in row.support() {
                if c < i {
                    v.set(c, true);
                } else if c > i {
                    v.set(c - 1, true);
                }
            }
            rows.push(v);
        }
        Gf2Matrix {
            rows,
            cols: self.cols - 1,
        }
    }

    /// Emits the text format: header "R C", then R lines of '0'/'1'.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows(), self.cols);
        for row in &self.rows {
            out.push_str(&format!("{row}\n"));
        }
        out
    }

    /// Parses the text format produced by [`to_text`](Self::to_text).
    pub fn from_text(text: &str) -> Result<Self, MatrixParseError> {
        let mut lines = text.lines();
        let header = lines.next().ok_or(MatrixParseError::BadHeader)?;
        let mut parts = header.split_whitespace();
        let r: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or(MatrixParseError::BadHeader)?;
        let c: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or(MatrixParseError::BadHeader)?;
        if parts.next().is_some() {
            return Err(MatrixParseError::BadHeader);
        }
        let mut rows = Vec::with_capacity(r);
        for (idx, line) in lines.enumerate() {
            let line_no = idx + 2;
            if rows.len() == r {
                return Err(MatrixParseError::BadRowCount {
                    expected: r,
                    got: r + 1,
                });
            }
            if line.chars().count() != c {
                return Err(MatrixParseError::BadRowLength {
                    line: line_no,
                    expected: c,
                    got: line.chars().count(),
                });
            }
            let mut v = Gf2Vector::zeros(c);
            for (j, ch) in line.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => v.set(j, true),
                    _ => return Err(MatrixParseError::BadChar { line: line_no, ch }),
                }
            }
            rows.push(v);
        }
        if rows.len() != r {
            return Err(MatrixParseError::BadRowCount {
                expected: r,
                got: rows.len(),
            });
        }
        Ok(Self { rows, cols: c })
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.rows(), self.cols)?;
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}
