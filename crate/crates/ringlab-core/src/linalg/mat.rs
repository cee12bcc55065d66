//! Dense row-major matrices over `F_p`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use super::field::PrimeField;

/// A dense `rows × cols` matrix with entries in `[0, p)`.
///
/// Either dimension may be zero; a `0 × n` matrix is the empty stack of
/// row vectors and shows up naturally as the basis of a zero subspace.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from stacked rows; every row must have length
    /// `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "row length mismatch");
            entries.extend_from_slice(row);
        }
        Self {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    /// A `1 × n` matrix holding one row vector.
    pub fn row_vector(v: &[u32]) -> Self {
        Self {
            rows: 1,
            cols: v.len(),
            entries: v.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> u32 {
        debug_assert!(r < self.rows && c < self.cols);
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        debug_assert!(r < self.rows && c < self.cols);
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn add(&self, f: &PrimeField, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn sub(&self, f: &PrimeField, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn scale(&self, f: &PrimeField, k: u32) -> Mat {
        let entries = self.entries.iter().map(|&a| f.mul(a, k)).collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn mul(&self, f: &PrimeField, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "inner dimension mismatch");
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..rhs.cols {
                    let cur = out.at(r, c);
                    out.set(r, c, f.add(cur, f.mul(a, rhs.at(k, c))));
                }
            }
        }
        out
    }

    /// `v · self` for a row vector `v` of length `rows`.
    pub fn apply_row(&self, f: &PrimeField, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.rows, "vector length mismatch");
        let mut out = vec![0u32; self.cols];
        for (r, &coeff) in v.iter().enumerate() {
            if coeff == 0 {
                continue;
            }
            for c in 0..self.cols {
                out[c] = f.add(out[c], f.mul(coeff, self.at(r, c)));
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.at(r, c));
            }
        }
        out
    }

    /// Vertical stack; all parts must have the same column count.
    pub fn vstack(parts: &[&Mat]) -> Mat {
        assert!(!parts.is_empty(), "vstack of no parts");
        let cols = parts[0].cols;
        let mut entries = Vec::new();
        let mut rows = 0;
        for part in parts {
            assert_eq!(part.cols, cols, "column mismatch in vstack");
            entries.extend_from_slice(&part.entries);
            rows += part.rows;
        }
        Mat {
            rows,
            cols,
            entries,
        }
    }

    /// Horizontal stack; all parts must have the same row count.
    pub fn hstack(parts: &[&Mat]) -> Mat {
        assert!(!parts.is_empty(), "hstack of no parts");
        let rows = parts[0].rows;
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Mat::zeros(rows, cols);
        let mut offset = 0;
        for part in parts {
            assert_eq!(part.rows, rows, "row mismatch in hstack");
            for r in 0..rows {
                for c in 0..part.cols {
                    out.set(r, offset + c, part.at(r, c));
                }
            }
            offset += part.cols;
        }
        out
    }

    /// Copy of the sub-block given by row and column ranges.
    pub fn block(&self, rows: Range<usize>, cols: Range<usize>) -> Mat {
        assert!(rows.end <= self.rows && cols.end <= self.cols);
        Mat::from_fn(rows.len(), cols.len(), |r, c| {
            self.at(rows.start + r, cols.start + c)
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form with zero rows dropped. Pivoting is
    /// deterministic (first nonzero entry in column order), so the
    /// output is canonical for the row space.
    pub fn rref(&self, f: &PrimeField) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.at(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(m.at(r, c)).expect("pivot is nonzero");
            if inv != 1 {
                for cc in c..m.cols {
                    m.set(r, cc, f.mul(m.at(r, cc), inv));
                }
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.at(i, c);
                if factor == 0 {
                    continue;
                }
                for cc in c..m.cols {
                    let v = f.sub(m.at(i, cc), f.mul(factor, m.at(r, cc)));
                    m.set(i, cc, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.entries.truncate(r * m.cols);
        m.rows = r;
        Rref { mat: m, pivots }
    }

    pub fn rank(&self, f: &PrimeField) -> usize {
        self.rref(f).rank()
    }

    /// Inverse of a square matrix, via elimination on `[self | I]`.
    pub fn inverse(&self, f: &PrimeField) -> Option<Mat> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let aug = Mat::hstack(&[self, &Mat::identity(n)]);
        let red = aug.rref(f);
        // all n pivots must sit in the left block
        if red.rank() != n || red.pivots.iter().any(|&c| c >= n) {
            return None;
        }
        Some(red.mat.block(0..n, n..2 * n))
    }

    pub fn is_invertible(&self, f: &PrimeField) -> bool {
        self.rows == self.cols && self.rank(f) == self.rows
    }
}

/// Result of [`Mat::rref`]: the trimmed echelon matrix plus its pivot
/// columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub mat: Mat,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    #[test]
    fn multiply_and_identity() {
        let f = PrimeField::new(3).unwrap();
        let a = Mat::from_rows(2, &[vec![1, 2], vec![0, 1]]);
        let id = Mat::identity(2);
        assert_eq!(a.mul(&f, &id), a);
        assert_eq!(id.mul(&f, &a), a);
        let b = Mat::from_rows(2, &[vec![2, 0], vec![1, 1]]);
        // [[1,2],[0,1]] · [[2,0],[1,1]] = [[4,2],[1,1]] = [[1,2],[1,1]] mod 3
        assert_eq!(a.mul(&f, &b), Mat::from_rows(2, &[vec![1, 2], vec![1, 1]]));
    }

    #[test]
    fn rref_drops_zero_rows_and_is_canonical() {
        let f = f2();
        let m = Mat::from_rows(2, &[vec![1, 1], vec![1, 1]]);
        let r = m.rref(&f);
        assert_eq!(r.rank(), 1);
        assert_eq!(r.mat, Mat::from_rows(2, &[vec![1, 1]]));
        assert_eq!(r.pivots, vec![0]);

        let z = Mat::zeros(3, 2).rref(&f);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.mat.rows(), 0);
        assert_eq!(z.mat.cols(), 2);
    }

    #[test]
    fn rref_is_idempotent_on_a_worked_example() {
        let f = PrimeField::new(5).unwrap();
        let m = Mat::from_rows(3, &[vec![2, 4, 1], vec![1, 2, 3], vec![3, 1, 0]]);
        let r1 = m.rref(&f);
        let r2 = r1.mat.rref(&f);
        assert_eq!(r1.mat, r2.mat);
        assert_eq!(r1.pivots, r2.pivots);
    }

    #[test]
    fn inverse_round_trip() {
        let f = PrimeField::new(7).unwrap();
        let m = Mat::from_rows(3, &[vec![1, 2, 0], vec![0, 1, 4], vec![5, 0, 1]]);
        let inv = m.inverse(&f).unwrap();
        assert_eq!(m.mul(&f, &inv), Mat::identity(3));
        assert_eq!(inv.mul(&f, &m), Mat::identity(3));

        let singular = Mat::from_rows(2, &[vec![1, 1], vec![1, 1]]);
        assert!(singular.inverse(&f2()).is_none());
    }

    #[test]
    fn apply_row_matches_matrix_product() {
        let f = PrimeField::new(3).unwrap();
        let m = Mat::from_rows(3, &[vec![1, 0, 2], vec![2, 1, 0], vec![0, 1, 1]]);
        let v = [1u32, 2, 1];
        let via_vec = m.apply_row(&f, &v);
        let via_mat = Mat::row_vector(&v).mul(&f, &m);
        assert_eq!(via_mat.row(0), &via_vec[..]);
    }

    #[test]
    fn stacking_and_blocks() {
        let a = Mat::identity(2);
        let b = Mat::zeros(1, 2);
        let s = Mat::vstack(&[&a, &b]);
        assert_eq!(s.rows(), 3);
        assert_eq!(s.block(0..2, 0..2), a);
        let h = Mat::hstack(&[&a, &a]);
        assert_eq!(h.cols(), 4);
        assert_eq!(h.block(0..2, 2..4), a);
    }
}
