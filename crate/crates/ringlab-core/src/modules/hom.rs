//! Homomorphism spaces between right modules and isomorphism search.

use alloc::vec;
use alloc::vec::Vec;

use super::{ModuleMap, RightModule};
use crate::linalg::{checked_power, LinearSystem, Mat, PrimeField};
use crate::rng::{SplitMix64, DEFAULT_SEED};

/// Randomized trials attempted when the homomorphism space is too big
/// to enumerate.
const RANDOM_TRIALS: u64 = 100_000;

/// Basis of the space of module maps `src → dst`, as matrices. The
/// commuting conditions `A_i^src X = X A_i^dst` form one linear system;
/// the basis is its canonical kernel basis, so the result is
/// deterministic.
pub fn hom_basis(src: &RightModule, dst: &RightModule) -> Vec<Mat> {
    assert_eq!(src.algebra_dim(), dst.algebra_dim(), "different algebras");
    assert_eq!(src.field().modulus(), dst.field().modulus());
    let f = src.field();
    let (s, d) = (src.dim(), dst.dim());
    let unknowns = s * d;
    let mut sys = LinearSystem::new(unknowns);
    let mut row = vec![0u32; unknowns];
    for i in 0..src.algebra_dim() {
        let a = src.action(i);
        let b = dst.action(i);
        for r in 0..s {
            for c in 0..d {
                for e in row.iter_mut() {
                    *e = 0;
                }
                // (A X)_{r,c} = Σ_u A[r,u] · x_{u,c}
                for u in 0..s {
                    row[u * d + c] = f.add(row[u * d + c], a.at(r, u));
                }
                // −(X B)_{r,c} = −Σ_v B[v,c] · x_{r,v}
                for v in 0..d {
                    row[r * d + v] = f.sub(row[r * d + v], b.at(v, c));
                }
                sys.push_equation(&row, 0);
            }
        }
    }
    let kernel = sys
        .solve(f)
        .expect("homogeneous system is consistent")
        .kernel;
    (0..kernel.dim())
        .map(|r| {
            let flat = kernel.basis().row(r);
            Mat::from_fn(s, d, |i, j| flat[i * d + j])
        })
        .collect()
}

pub(crate) fn combine(f: &PrimeField, basis: &[Mat], coeffs: &[u32]) -> Mat {
    let mut out = Mat::zeros(basis[0].rows(), basis[0].cols());
    for (m, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            out = out.add(f, &m.scale(f, c));
        }
    }
    out
}

/// Outcome of an isomorphism search. `NotIsomorphic` is only returned
/// on conclusive evidence (an invariant differs, or an exhaustive scan
/// of the homomorphism space found no bijection); `Undetermined` means
/// the space was too large to enumerate and randomized trials failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoSearch {
    Found(ModuleMap),
    NotIsomorphic,
    Undetermined,
}

impl IsoSearch {
    pub fn found(&self) -> Option<&ModuleMap> {
        match self {
            IsoSearch::Found(m) => Some(m),
            _ => None,
        }
    }
}

/// Searches for a module isomorphism `src → dst`.
///
/// Ladder: dimension comparison, then per-basis-element action ranks
/// (isomorphism invariants), then an exhaustive scan of the
/// homomorphism space when it fits under the cap, then seeded
/// randomized sampling.
pub fn find_isomorphism(src: &RightModule, dst: &RightModule) -> IsoSearch {
    if src.dim() != dst.dim() || src.algebra_dim() != dst.algebra_dim() {
        return IsoSearch::NotIsomorphic;
    }
    let f = src.field();
    if src.dim() == 0 {
        return IsoSearch::Found(ModuleMap::new(Mat::zeros(0, 0)));
    }
    for i in 0..src.algebra_dim() {
        if src.action(i).rank(f) != dst.action(i).rank(f) {
            return IsoSearch::NotIsomorphic;
        }
    }
    let basis = hom_basis(src, dst);
    if basis.is_empty() {
        return IsoSearch::NotIsomorphic;
    }
    let p = f.modulus() as u64;
    let h = basis.len();
    if let Some(total) = checked_power(p, h as u32) {
        let mut coeffs = vec![0u32; h];
        for idx in 1..total {
            let mut rest = idx;
            for c in coeffs.iter_mut() {
                *c = (rest % p) as u32;
                rest /= p;
            }
            let cand = combine(f, &basis, &coeffs);
            if cand.is_invertible(f) {
                return IsoSearch::Found(ModuleMap::new(cand));
            }
        }
        IsoSearch::NotIsomorphic
    } else {
        let mut rng = SplitMix64::new(DEFAULT_SEED);
        let mut coeffs = vec![0u32; h];
        for _ in 0..RANDOM_TRIALS {
            for c in coeffs.iter_mut() {
                *c = rng.next_below(p) as u32;
            }
            let cand = combine(f, &basis, &coeffs);
            if cand.is_invertible(f) {
                return IsoSearch::Found(ModuleMap::new(cand));
            }
        }
        IsoSearch::Undetermined
    }
}
