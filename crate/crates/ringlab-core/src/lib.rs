//! Exact linear algebra and module-theoretic machinery for finite
//! algebras over prime fields.
//!
//! Everything here is deterministic and exact: arithmetic happens in
//! `F_p`, subspaces are kept in canonical reduced row echelon form, and
//! every search that claims exhaustiveness really enumerates. The crate
//! is `no_std` (with `alloc`) and has no runtime dependencies.
//!
//! Module layout, bottom up:
//!
//! * [`linalg`]: prime fields, dense matrices, subspace calculus, affine
//!   solve with a canonical particular solution.
//! * [`algebra`]: finite-dimensional unital algebras given by structure
//!   constants, preset families, corner rings `eRe`.
//! * [`modules`]: right modules over such an algebra, submodules,
//!   module maps, complements, summand splitting, indecomposable
//!   decomposition, and the exchange-style replacement step.
//! * [`regularity`]: inner inverses, unit-regularity certificates,
//!   nilpotency and power data, idempotent-power splittings, stable
//!   range one scans, element classification.
//! * [`theorems`]: the layered direct-sum chains for a regular element
//!   and the extraction of an explicit unit `u` with `a·u·a = a`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod linalg;
pub mod modules;
pub mod regularity;
pub mod rng;
pub mod sampling;
pub mod theorems;

/// Hard ceiling for exhaustive enumerations (elements of a ring or of a
/// solution set, homomorphism scans, and so on). Searches that would
/// exceed it report that they were not exhaustive instead of running
/// forever.
pub const EXHAUSTIVE_CAP: u64 = 1 << 20;
