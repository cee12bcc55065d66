//! Complements of direct summands and refinement of a module sum into
//! a direct sum.

use alloc::string::ToString;
use alloc::vec;

use super::{is_direct_sum, realize, ModuleError, RightModule, Submodule};
use crate::linalg::{left_kernel, LinearSystem, Mat, PrimeField, Subspace};

/// Pushes the equations of `L · X = X · R` for an `s × d` unknown `X`
/// (commutation with a pair of action matrices).
fn push_commute(sys: &mut LinearSystem, f: &PrimeField, l: &Mat, r: &Mat, s: usize, d: usize) {
    let mut row = vec![0u32; s * d];
    for i in 0..s {
        for j in 0..d {
            for e in row.iter_mut() {
                *e = 0;
            }
            for u in 0..s {
                row[u * d + j] = f.add(row[u * d + j], l.at(i, u));
            }
            for v in 0..d {
                row[i * d + v] = f.sub(row[i * d + v], r.at(v, j));
            }
            sys.push_equation(&row, 0);
        }
    }
}

/// Pushes the equations of `X · M = T` for an `s × d` unknown `X`,
/// where `M` is `d × k` and `T` is `s × k`.
fn push_right_product(sys: &mut LinearSystem, m: &Mat, t: &Mat, s: usize, d: usize) {
    debug_assert_eq!(t.rows(), s);
    debug_assert_eq!(t.cols(), m.cols());
    let mut row = vec![0u32; s * d];
    for i in 0..s {
        for j in 0..m.cols() {
            for e in row.iter_mut() {
                *e = 0;
            }
            for v in 0..d {
                row[i * d + v] = m.at(v, j);
            }
            sys.push_equation(&row, t.at(i, j));
        }
    }
}

/// Pushes the equations of `B · X = T` for an `s × d` unknown `X`,
/// where `B` is `r × s` and `T` is `r × d`.
fn push_left_product(sys: &mut LinearSystem, b: &Mat, t: &Mat, s: usize, d: usize) {
    debug_assert_eq!(t.rows(), b.rows());
    debug_assert_eq!(t.cols(), d);
    let mut row = vec![0u32; s * d];
    for i in 0..b.rows() {
        for j in 0..d {
            for e in row.iter_mut() {
                *e = 0;
            }
            for u in 0..s {
                row[u * d + j] = b.at(i, u);
            }
            sys.push_equation(&row, t.at(i, j));
        }
    }
}

fn reshape(flat: &[u32], rows: usize, cols: usize) -> Mat {
    Mat::from_fn(rows, cols, |r, c| flat[r * cols + c])
}

/// Finds a complement to a direct summand: solves for a module-linear
/// retraction `π` with image `sub` fixing `sub` pointwise, and returns
/// its kernel. Fails with `NotASummand` when no retraction exists.
pub fn complement(module: &RightModule, sub: &Submodule) -> Result<Submodule, ModuleError> {
    let f = module.field();
    let n = module.dim();
    if sub.space().ambient_dim() != n {
        return Err(ModuleError::ShapeMismatch);
    }
    let mut sys = LinearSystem::new(n * n);
    for i in 0..module.algebra_dim() {
        push_commute(&mut sys, f, module.action(i), module.action(i), n, n);
    }
    let ann = sub.space().annihilator(f);
    push_right_product(&mut sys, &ann, &Mat::zeros(n, ann.cols()), n, n);
    push_left_product(&mut sys, sub.basis(), sub.basis(), n, n);
    let Some(sol) = sys.solve(f) else {
        return Err(ModuleError::NotASummand);
    };
    let retraction = reshape(&sol.particular, n, n);
    let kernel = left_kernel(f, &retraction);
    debug_assert!(is_direct_sum(
        f,
        &[sub.space(), &kernel],
        &module.full_space()
    ));
    debug_assert!(module.is_invariant(&kernel));
    Ok(Submodule::from_invariant(kernel))
}

/// Complement of `inner` taken inside `outer` (both submodules of
/// `module`, `inner ⊆ outer`).
pub fn complement_within(
    module: &RightModule,
    outer: &Submodule,
    inner: &Submodule,
) -> Result<Submodule, ModuleError> {
    let f = module.field();
    if !outer.space().contains_space(f, inner.space()) {
        return Err(ModuleError::NotContained);
    }
    let realized = realize(module, outer);
    let inner_in = Submodule::from_invariant(realized.restrict(f, inner.space()));
    let comp = complement(&realized.module, &inner_in)?;
    let lifted = realized.lift(f, comp.space());
    debug_assert!(is_direct_sum(f, &[inner.space(), &lifted], outer.space()));
    Ok(Submodule::from_invariant(lifted))
}

/// Given `p = a + b` with `a` a direct summand of `p`, produces
/// `(c, d)` with `p = a ⊕ c`, `c ⊆ b`, and `b = c ⊕ d`.
///
/// The summand `c` is the image of a module-linear section of the
/// projection `p → p/a` restricted to `b`; `d = a ∩ b`. The section is
/// found by exact solve, which succeeds whenever `p` is projective
/// (in this crate's uses `p` is a summand of the regular module).
pub fn split_sum_along_summand(
    module: &RightModule,
    p: &Submodule,
    a: &Submodule,
    b: &Submodule,
) -> Result<(Submodule, Submodule), ModuleError> {
    let f = module.field();
    if !p.space().contains_space(f, a.space()) || !p.space().contains_space(f, b.space()) {
        return Err(ModuleError::NotContained);
    }
    if a.space().sum(f, b.space()) != *p.space() {
        return Err(ModuleError::SumNotWhole);
    }
    let realized = realize(module, p);
    let pd = p.dim();
    let a_in = Submodule::from_invariant(realized.restrict(f, a.space()));
    let b_in = Submodule::from_invariant(realized.restrict(f, b.space()));
    let a_comp = complement(&realized.module, &a_in)?;
    // projection of p onto the complement along a, in p-coordinates
    let stack = Mat::vstack(&[a_in.basis(), a_comp.basis()]);
    let stack_inv = stack
        .inverse(f)
        .ok_or_else(|| ModuleError::Internal("summand stack is singular".to_string()))?;
    let onto_comp = stack_inv.mul(
        f,
        &Mat::vstack(&[&Mat::zeros(a_in.dim(), pd), a_comp.basis()]),
    );
    // section σ of that projection with image inside b:
    //   σ is module-linear, lands in b, and projects back to the identity
    let comp_realized = realize(&realized.module, &a_comp);
    let cd = a_comp.dim();
    let mut sys = LinearSystem::new(cd * pd);
    for i in 0..module.algebra_dim() {
        push_commute(
            &mut sys,
            f,
            comp_realized.module.action(i),
            realized.module.action(i),
            cd,
            pd,
        );
    }
    let ann_b = b_in.space().annihilator(f);
    push_right_product(&mut sys, &ann_b, &Mat::zeros(cd, ann_b.cols()), cd, pd);
    let back = onto_comp.mul(f, &a_comp.space().pivot_selector());
    push_right_product(&mut sys, &back, &Mat::identity(cd), cd, pd);
    let Some(sol) = sys.solve(f) else {
        return Err(ModuleError::NoSection);
    };
    let section = reshape(&sol.particular, cd, pd);
    let c_inner = Subspace::from_spanning(f, &section);
    let c = Submodule::from_invariant(realized.lift(f, &c_inner));
    let d = Submodule::from_invariant(a.space().intersect(f, b.space()));
    if !is_direct_sum(f, &[a.space(), c.space()], p.space()) {
        return Err(ModuleError::Internal(
            "section image does not complement the summand".to_string(),
        ));
    }
    if !is_direct_sum(f, &[c.space(), d.space()], b.space()) {
        return Err(ModuleError::Internal(
            "second part does not split as claimed".to_string(),
        ));
    }
    Ok((c, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::preset;
    use crate::modules::{principal_right_ideal, regular_representation, right_annihilator};

    #[test]
    fn complements_in_a_semisimple_ring_always_exist() {
        let r = preset("M(2,2)").unwrap();
        let m = regular_representation(&r);
        let e11 = r.basis_element(0);
        let row = principal_right_ideal(&r, &e11);
        let comp = complement(&m, &row).unwrap();
        assert_eq!(comp.dim(), 2);
        assert!(is_direct_sum(
            r.field(),
            &[row.space(), comp.space()],
            &m.full_space()
        ));
    }

    #[test]
    fn radical_of_t2_is_not_a_summand() {
        let r = preset("T(2,2)").unwrap();
        let m = regular_representation(&r);
        // e12·F_2 is a right ideal but not a direct summand of T(2,2)
        let rad = m.generated_submodule(&[r.basis_element(1).coords().to_vec()]);
        assert_eq!(rad.dim(), 1);
        assert!(matches!(
            complement(&m, &rad),
            Err(ModuleError::NotASummand)
        ));
    }

    #[test]
    fn trivial_complements() {
        let r = preset("T(2,2)").unwrap();
        let m = regular_representation(&r);
        let zero = m.zero_submodule();
        let full = m.full_submodule();
        assert_eq!(complement(&m, &zero).unwrap().dim(), 3);
        assert_eq!(complement(&m, &full).unwrap().dim(), 0);
    }

    #[test]
    fn complement_within_a_summand() {
        let r = preset("M(2,2)").unwrap();
        let m = regular_representation(&r);
        // inside R_R, take outer = row1 ⊕ row2 = R, inner = row1
        let row1 = principal_right_ideal(&r, &r.basis_element(0));
        let comp = complement_within(&m, &m.full_submodule(), &row1).unwrap();
        assert_eq!(comp.dim(), 2);
        // non-containment is reported
        let err = complement_within(&m, &row1, &m.full_submodule());
        assert!(matches!(err, Err(ModuleError::NotContained)));
    }

    #[test]
    fn split_with_the_summand_equal_to_the_whole() {
        let r = preset("M(2,2)").unwrap();
        let m = regular_representation(&r);
        let p = m.full_submodule();
        let b = principal_right_ideal(&r, &r.basis_element(0));
        let (c, d) = split_sum_along_summand(&m, &p, &p, &b).unwrap();
        assert!(c.is_zero());
        assert_eq!(d, b);
    }

    #[test]
    fn split_with_a_zero_summand() {
        let r = preset("M(2,2)").unwrap();
        let m = regular_representation(&r);
        let p = m.full_submodule();
        let (c, d) = split_sum_along_summand(&m, &p, &m.zero_submodule(), &p).unwrap();
        assert_eq!(c.space(), &m.full_space());
        assert!(d.is_zero());
    }

    #[test]
    fn split_of_an_overlapping_sum_in_m2() {
        // P = R, A = r(e12) = first-column annihilator... = e-row span:
        // r(e12) in M_2 is spanned by e11, e12 (top row kills from the left? )
        // Use A = r(e12), B = R: A + B = R, A is a summand (semisimple).
        let r = preset("M(2,2)").unwrap();
        let m = regular_representation(&r);
        let e12 = r.basis_element(1);
        let a = right_annihilator(&r, &e12);
        assert_eq!(a.dim(), 2);
        let p = m.full_submodule();
        let (c, d) = split_sum_along_summand(&m, &p, &a, &p).unwrap();
        let f = r.field();
        assert!(is_direct_sum(f, &[a.space(), c.space()], p.space()));
        assert!(is_direct_sum(f, &[c.space(), d.space()], p.space()));
        assert_eq!(d, a);
    }

    #[test]
    fn split_rejects_non_spanning_sums() {
        let r = preset("M(2,2)").unwrap();
        let m = regular_representation(&r);
        let row = principal_right_ideal(&r, &r.basis_element(0));
        let err = split_sum_along_summand(&m, &m.full_submodule(), &row, &row);
        assert!(matches!(err, Err(ModuleError::SumNotWhole)));
    }
}
