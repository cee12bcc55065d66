//! Deterministic random instance generation for the randomized
//! verification suites.
//!
//! Instances are built from idempotents, so the preconditions they are
//! meant to exercise (`p = a + b` with `a` a direct summand of `p`)
//! hold by construction; the suites then verify the *conclusions* of
//! the splitting machinery on each instance.

use alloc::vec::Vec;

use crate::algebra::{Element, FiniteAlgebra};
use crate::modules::{principal_right_ideal, RightModule, Submodule};
use crate::rng::SplitMix64;

/// Draws a uniformly random ring element. The ring must be within the
/// enumeration cap.
pub fn random_element(alg: &FiniteAlgebra, rng: &mut SplitMix64) -> Element {
    let count = alg.element_count().expect("ring small enough to sample");
    alg.element_at(rng.next_below(count))
}

/// Draws a random idempotent by rejection sampling; falls back to zero
/// after a while (zero is always idempotent, so the fallback is safe).
pub fn random_idempotent(alg: &FiniteAlgebra, rng: &mut SplitMix64) -> Element {
    for _ in 0..10_000 {
        let e = random_element(alg, rng);
        if alg.is_idempotent(&e) {
            return e;
        }
    }
    alg.zero()
}

/// A triple of submodules of the regular module with `p = a + b` and
/// `a` a direct summand of `p`.
#[derive(Debug, Clone)]
pub struct SplitInstance {
    pub p: Submodule,
    pub a: Submodule,
    pub b: Submodule,
}

/// Builds a random instance: `p = eR` for a random idempotent `e`,
/// `a = e'R` for a random idempotent `e'` of the corner `eRe` (so `a`
/// is a summand of `p`), and `b = (e−e')R` plus a few random right
/// ideals inside `p`, which together with `a` always covers `p`.
pub fn random_split_instance(
    alg: &FiniteAlgebra,
    module: &RightModule,
    rng: &mut SplitMix64,
) -> SplitInstance {
    let e = random_idempotent(alg, rng);
    let corner = alg
        .corner_algebra(&e)
        .expect("sampled element is idempotent");
    let corner_alg = corner.algebra();
    let inner = if corner_alg.dim() == 0 {
        alg.zero()
    } else {
        let count = corner_alg
            .element_count()
            .expect("corner is within the cap");
        let mut pick = corner_alg.zero();
        for _ in 0..10_000 {
            let cand = corner_alg.element_at(rng.next_below(count));
            if corner_alg.is_idempotent(&cand) {
                pick = cand;
                break;
            }
        }
        corner.embed(&pick)
    };
    let p = principal_right_ideal(alg, &e);
    let a = principal_right_ideal(alg, &inner);
    let rest = alg.sub(&e, &inner);
    let mut rows: Vec<Vec<u32>> = Vec::new();
    let rest_ideal = principal_right_ideal(alg, &rest);
    for r in 0..rest_ideal.dim() {
        rows.push(rest_ideal.basis().row(r).to_vec());
    }
    for _ in 0..rng.next_below(3) {
        let x = random_element(alg, rng);
        rows.push(alg.mul(&e, &x).coords().to_vec());
    }
    let b = module.generated_submodule(&rows);
    SplitInstance { p, a, b }
}
