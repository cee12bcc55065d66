//! Subspaces in canonical form and exact affine solving.

use alloc::vec;
use alloc::vec::Vec;

use super::field::PrimeField;
use super::mat::Mat;
use crate::EXHAUSTIVE_CAP;

/// A linear subspace of the row space `F_p^n`.
///
/// The basis is always the reduced row echelon form of a spanning set
/// with zero rows dropped, so two equal subspaces compare equal
/// structurally and everything derived from the basis is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Mat::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Mat::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the rows of `m`.
    pub fn from_spanning(f: &PrimeField, m: &Mat) -> Self {
        let r = m.rref(f);
        Self {
            ambient: m.cols(),
            basis: r.mat,
            pivots: r.pivots,
        }
    }

    pub fn from_rows(f: &PrimeField, ambient: usize, rows: &[Vec<u32>]) -> Self {
        Self::from_spanning(f, &Mat::from_rows(ambient, rows))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical (RREF) basis, one row per basis vector.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` lies
    /// outside the subspace. Because the basis is in RREF, coordinates
    /// can be read off at the pivot columns and then verified.
    pub fn coords_of(&self, f: &PrimeField, v: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(v.len(), self.ambient);
        let coords: Vec<u32> = self.pivots.iter().map(|&c| v[c]).collect();
        let rebuilt = self.basis.apply_row(f, &coords);
        if rebuilt == v {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, f: &PrimeField, v: &[u32]) -> bool {
        self.coords_of(f, v).is_some()
    }

    pub fn contains_space(&self, f: &PrimeField, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient);
        (0..other.dim()).all(|r| self.contains(f, other.basis.row(r)))
    }

    /// `coords · basis` back in the ambient space.
    pub fn linear_combination(&self, f: &PrimeField, coords: &[u32]) -> Vec<u32> {
        self.basis.apply_row(f, coords)
    }

    pub fn sum(&self, f: &PrimeField, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        Subspace::from_spanning(f, &Mat::vstack(&[&self.basis, &other.basis]))
    }

    /// Intersection via the Zassenhaus block construction: row reduce
    /// `[U U; V 0]`; rows whose left half vanishes carry the
    /// intersection in their right half.
    pub fn intersect(&self, f: &PrimeField, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let n = self.ambient;
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(n);
        }
        let top = Mat::hstack(&[&self.basis, &self.basis]);
        let bottom = Mat::hstack(&[&other.basis, &Mat::zeros(other.dim(), n)]);
        let red = Mat::vstack(&[&top, &bottom]).rref(f);
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for r in 0..red.mat.rows() {
            if (0..n).all(|c| red.mat.at(r, c) == 0) {
                rows.push(red.mat.block(r..r + 1, n..2 * n).row(0).to_vec());
            }
        }
        Subspace::from_rows(f, n, &rows)
    }

    /// Selector matrix `S` (`n × dim`) with `v · S = coords` for every
    /// `v` in the subspace; it reads off the pivot columns.
    pub fn pivot_selector(&self) -> Mat {
        let mut s = Mat::zeros(self.ambient, self.dim());
        for (r, &c) in self.pivots.iter().enumerate() {
            s.set(c, r, 1);
        }
        s
    }

    /// Matrix `C` (`n × (n − dim)`) whose columns span the right kernel
    /// of the basis, so `v · C = 0` exactly when `v` lies in the
    /// subspace. Used to express membership as a linear constraint.
    pub fn annihilator(&self, f: &PrimeField) -> Mat {
        let kernel = right_kernel(f, &self.basis);
        debug_assert_eq!(kernel.dim(), self.ambient - self.dim());
        kernel.basis().transpose()
    }

    /// Number of vectors, if at most [`EXHAUSTIVE_CAP`].
    pub fn element_count(&self, f: &PrimeField) -> Option<u64> {
        checked_power(f.modulus() as u64, self.dim() as u32)
    }

    /// The `idx`-th vector: digits of `idx` base `p`, least significant
    /// digit weighting basis row 0.
    pub fn element_at(&self, f: &PrimeField, idx: u64) -> Vec<u32> {
        let p = f.modulus() as u64;
        let mut coords = vec![0u32; self.dim()];
        let mut rest = idx;
        for coord in coords.iter_mut() {
            *coord = (rest % p) as u32;
            rest /= p;
        }
        assert_eq!(rest, 0, "index out of range");
        self.linear_combination(f, &coords)
    }
}

/// `p^k` if it stays within [`EXHAUSTIVE_CAP`].
pub fn checked_power(p: u64, k: u32) -> Option<u64> {
    let mut out = 1u64;
    for _ in 0..k {
        out = out.checked_mul(p)?;
        if out > EXHAUSTIVE_CAP {
            return None;
        }
    }
    Some(out)
}

/// Solution set of a consistent linear system: one canonical particular
/// solution (all free variables zero in the RREF parameterization) plus
/// the homogeneous kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vec<u32>,
    pub kernel: Subspace,
}

impl AffineSolution {
    /// Number of solutions, if at most [`EXHAUSTIVE_CAP`].
    pub fn count(&self, f: &PrimeField) -> Option<u64> {
        self.kernel.element_count(f)
    }

    /// The `idx`-th solution; index 0 is the canonical particular one.
    pub fn at(&self, f: &PrimeField, idx: u64) -> Vec<u32> {
        let shift = self.kernel.element_at(f, idx);
        self.particular
            .iter()
            .zip(&shift)
            .map(|(&a, &b)| f.add(a, b))
            .collect()
    }
}

/// A growing list of linear equations over a fixed set of unknowns.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    unknowns: usize,
    coeffs: Vec<u32>,
    rhs: Vec<u32>,
}

impl LinearSystem {
    pub fn new(unknowns: usize) -> Self {
        Self {
            unknowns,
            coeffs: Vec::new(),
            rhs: Vec::new(),
        }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn equations(&self) -> usize {
        self.rhs.len()
    }

    pub fn push_equation(&mut self, coeffs: &[u32], rhs: u32) {
        assert_eq!(coeffs.len(), self.unknowns, "equation width mismatch");
        self.coeffs.extend_from_slice(coeffs);
        self.rhs.push(rhs);
    }

    /// Solves the accumulated system; `None` if inconsistent.
    pub fn solve(&self, f: &PrimeField) -> Option<AffineSolution> {
        let n = self.unknowns;
        let eqs = self.equations();
        let mut aug = Mat::zeros(eqs, n + 1);
        for r in 0..eqs {
            for c in 0..n {
                aug.set(r, c, self.coeffs[r * n + c]);
            }
            aug.set(r, n, self.rhs[r]);
        }
        let red = aug.rref(f);
        if red.pivots.last() == Some(&n) {
            return None;
        }
        let mut particular = vec![0u32; n];
        for (r, &c) in red.pivots.iter().enumerate() {
            particular[c] = red.mat.at(r, n);
        }
        let mut is_pivot = vec![false; n];
        for &c in &red.pivots {
            is_pivot[c] = true;
        }
        let mut kernel_rows: Vec<Vec<u32>> = Vec::new();
        for free in 0..n {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![0u32; n];
            v[free] = 1;
            for (r, &c) in red.pivots.iter().enumerate() {
                v[c] = f.neg(red.mat.at(r, free));
            }
            kernel_rows.push(v);
        }
        Some(AffineSolution {
            particular,
            kernel: Subspace::from_rows(f, n, &kernel_rows),
        })
    }
}

/// Solves `a · x = b` for a column vector `x`.
pub fn solve_matvec(f: &PrimeField, a: &Mat, b: &[u32]) -> Option<AffineSolution> {
    assert_eq!(b.len(), a.rows());
    let mut sys = LinearSystem::new(a.cols());
    for r in 0..a.rows() {
        sys.push_equation(a.row(r), b[r]);
    }
    sys.solve(f)
}

/// Solves `x · m = w` for a row vector `x`.
pub fn solve_vecmat(f: &PrimeField, m: &Mat, w: &[u32]) -> Option<AffineSolution> {
    assert_eq!(w.len(), m.cols());
    let mut sys = LinearSystem::new(m.rows());
    let mut col = vec![0u32; m.rows()];
    for c in 0..m.cols() {
        for r in 0..m.rows() {
            col[r] = m.at(r, c);
        }
        sys.push_equation(&col, w[c]);
    }
    sys.solve(f)
}

/// `{v : v · m = 0}` as a subspace of row vectors.
pub fn left_kernel(f: &PrimeField, m: &Mat) -> Subspace {
    solve_vecmat(f, m, &vec![0u32; m.cols()])
        .expect("homogeneous system is consistent")
        .kernel
}

/// `{x : m · x = 0}` with the solutions laid out as rows.
pub fn right_kernel(f: &PrimeField, m: &Mat) -> Subspace {
    solve_matvec(f, m, &vec![0u32; m.rows()])
        .expect("homogeneous system is consistent")
        .kernel
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    #[test]
    fn determined_system() {
        let f = f2();
        let mut sys = LinearSystem::new(2);
        sys.push_equation(&[1, 1], 1);
        sys.push_equation(&[0, 1], 1);
        let sol = sys.solve(&f).unwrap();
        assert_eq!(sol.particular, vec![0, 1]);
        assert!(sol.kernel.is_zero());
        assert_eq!(sol.count(&f), Some(1));
    }

    #[test]
    fn canonical_particular_has_zero_free_variables() {
        let f = f2();
        let mut sys = LinearSystem::new(2);
        sys.push_equation(&[1, 1], 1);
        let sol = sys.solve(&f).unwrap();
        // x0 is the pivot variable, x1 free, so the canonical solution
        // is (1, 0) and the kernel is spanned by (1, 1).
        assert_eq!(sol.particular, vec![1, 0]);
        assert_eq!(sol.kernel.dim(), 1);
        assert_eq!(sol.kernel.basis().row(0), &[1, 1]);
        assert_eq!(sol.count(&f), Some(2));
        assert_eq!(sol.at(&f, 0), vec![1, 0]);
        assert_eq!(sol.at(&f, 1), vec![0, 1]);
    }

    #[test]
    fn inconsistent_system() {
        let f = f2();
        let mut sys = LinearSystem::new(2);
        sys.push_equation(&[0, 0], 1);
        assert!(sys.solve(&f).is_none());
    }

    #[test]
    fn solve_every_solution_solves() {
        // Exhaustive oracle on a small underdetermined system over F_3.
        let f = PrimeField::new(3).unwrap();
        let a = Mat::from_rows(3, &[vec![1, 2, 0], vec![2, 1, 1]]);
        let b = [1u32, 2];
        let sol = solve_matvec(&f, &a, &b).unwrap();
        let count = sol.count(&f).unwrap();
        assert_eq!(count, 3); // rank 2, one free variable
        for idx in 0..count {
            let x = sol.at(&f, idx);
            for r in 0..a.rows() {
                let lhs = a
                    .row(r)
                    .iter()
                    .zip(&x)
                    .fold(0, |acc, (&c, &xv)| f.add(acc, f.mul(c, xv)));
                assert_eq!(lhs, b[r]);
            }
        }
    }

    #[test]
    fn vecmat_solves_row_systems() {
        let f = f2();
        let m = Mat::from_rows(2, &[vec![1, 1], vec![0, 1]]);
        let sol = solve_vecmat(&f, &m, &[1, 0]).unwrap();
        // x · m = (x0, x0 + x1) = (1, 0) forces x = (1, 1).
        assert_eq!(sol.particular, vec![1, 1]);
        assert!(sol.kernel.is_zero());
    }

    #[test]
    fn kernels() {
        let f = f2();
        let m = Mat::from_rows(3, &[vec![1, 0, 1], vec![0, 1, 1]]);
        // right kernel of a rank-2 map F_2^3 -> F_2^2... dimensions:
        // m is 2x3, right kernel in F_2^3 has dim 1: x0 + x2 = 0, x1 + x2 = 0.
        let rk = right_kernel(&f, &m);
        assert_eq!(rk.dim(), 1);
        assert_eq!(rk.basis().row(0), &[1, 1, 1]);
        // left kernel of the 2x3 matrix lives in F_2^2 and is trivial.
        let lk = left_kernel(&f, &m);
        assert_eq!(lk.ambient_dim(), 2);
        assert!(lk.is_zero());
    }

    #[test]
    fn subspace_membership_and_coords() {
        let f = f2();
        let s = Subspace::from_rows(&f, 3, &[vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&f, &[1, 1, 0]));
        assert!(!s.contains(&f, &[1, 0, 0]));
        assert_eq!(s.coords_of(&f, &[1, 1, 0]), Some(vec![1, 1]));
        let v = s.linear_combination(&f, &[1, 1]);
        assert_eq!(v, vec![1, 1, 0]);
    }

    #[test]
    fn sum_and_intersection_against_enumeration() {
        // U = <(1,0,1),(0,1,1)>, V = <(1,1,0),(0,0,1)> inside F_2^3.
        // Enumerating both four-element... sets by hand: the common
        // nonzero vector is (1,1,0), so the intersection is its span.
        let f = f2();
        let u = Subspace::from_rows(&f, 3, &[vec![1, 0, 1], vec![0, 1, 1]]);
        let v = Subspace::from_rows(&f, 3, &[vec![1, 1, 0], vec![0, 0, 1]]);
        let inter = u.intersect(&f, &v);
        assert_eq!(inter.dim(), 1);
        assert_eq!(inter.basis().row(0), &[1, 1, 0]);
        let sum = u.sum(&f, &v);
        assert!(sum.is_full());
        // dim(U) + dim(V) = dim(U+V) + dim(U∩V)
        assert_eq!(u.dim() + v.dim(), sum.dim() + inter.dim());
    }

    #[test]
    fn annihilator_characterizes_membership() {
        let f = f2();
        let s = Subspace::from_rows(&f, 3, &[vec![1, 0, 1]]);
        let ann = s.annihilator(&f);
        assert_eq!((ann.rows(), ann.cols()), (3, 2));
        for idx in 0..8u64 {
            let v = [idx as u32 & 1, (idx >> 1) as u32 & 1, (idx >> 2) as u32 & 1];
            let image = Mat::row_vector(&v).mul(&f, &ann);
            assert_eq!(image.is_zero(), s.contains(&f, &v), "v={v:?}");
        }
    }

    #[test]
    fn zero_and_full_edge_cases() {
        let f = f2();
        let z = Subspace::zero(3);
        let full = Subspace::full(3);
        assert!(z.intersect(&f, &full).is_zero());
        assert_eq!(z.sum(&f, &full), full);
        assert!(full.contains_space(&f, &z));
        assert_eq!(z.element_count(&f), Some(1));
        assert_eq!(z.element_at(&f, 0), vec![0, 0, 0]);
        // zero-dimensional ambient space
        let empty = Subspace::zero(0);
        assert!(empty.contains(&f, &[]));
        assert_eq!(empty.element_count(&f), Some(1));
    }

    #[test]
    fn element_enumeration_is_exhaustive() {
        let f = PrimeField::new(3).unwrap();
        let s = Subspace::from_rows(&f, 2, &[vec![1, 0], vec![0, 1]]);
        let count = s.element_count(&f).unwrap();
        assert_eq!(count, 9);
        let mut seen = std::collections::BTreeSet::new();
        for idx in 0..count {
            seen.insert(s.element_at(&f, idx));
        }
        assert_eq!(seen.len(), 9);
    }
}
