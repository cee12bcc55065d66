//! Exact dense linear algebra over a prime field.
//!
//! Conventions used across the crate:
//!
//! * vectors are rows; a linear map is applied as `v · M`;
//! * every subspace is stored as the reduced row echelon form of a
//!   spanning set, with zero rows dropped, so equal subspaces have
//!   byte-identical bases;
//! * affine solution sets carry one canonical particular solution (all
//!   free variables zero) plus the homogeneous kernel.

mod field;
mod mat;
mod space;

pub use field::{FieldError, PrimeField, MAX_MODULUS};
pub use mat::{Mat, Rref};
pub use space::{
    checked_power, left_kernel, right_kernel, solve_matvec, solve_vecmat, AffineSolution,
    LinearSystem, Subspace,
};
