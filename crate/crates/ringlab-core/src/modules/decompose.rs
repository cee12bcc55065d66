//! Indecomposable decompositions and the exchange replacement step.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::hom::combine;
use super::{
    complement, hom_basis, is_direct_sum, realize, DirectSumDecomposition, ModuleError,
    RightModule, Submodule,
};
use crate::linalg::{checked_power, left_kernel, Mat, Subspace};

/// Basis of the endomorphism space of a module.
pub fn endomorphism_basis(module: &RightModule) -> Vec<Mat> {
    hom_basis(module, module)
}

/// First nontrivial idempotent endomorphism in canonical enumeration
/// order, or `None` if the module is indecomposable.
fn first_splitting_idempotent(module: &RightModule) -> Result<Option<Mat>, ModuleError> {
    let f = module.field();
    let basis = endomorphism_basis(module);
    let p = f.modulus() as u64;
    let Some(total) = checked_power(p, basis.len() as u32) else {
        return Err(ModuleError::CapExceeded);
    };
    let id = Mat::identity(module.dim());
    let mut coeffs = vec![0u32; basis.len()];
    for idx in 1..total {
        let mut rest = idx;
        for c in coeffs.iter_mut() {
            *c = (rest % p) as u32;
            rest /= p;
        }
        let e = combine(f, &basis, &coeffs);
        if e == id || e.is_zero() {
            continue;
        }
        if e.mul(f, &e) == e {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

/// Splits a submodule into indecomposable summands by repeatedly
/// cutting along the first nontrivial idempotent endomorphism (image
/// first, then kernel), so the order of parts is deterministic.
pub fn decompose_submodule(
    module: &RightModule,
    sub: &Submodule,
) -> Result<Vec<Submodule>, ModuleError> {
    if sub.is_zero() {
        return Ok(Vec::new());
    }
    let realized = realize(module, sub);
    let Some(e) = first_splitting_idempotent(&realized.module)? else {
        return Ok(vec![sub.clone()]);
    };
    let f = module.field();
    let image = realized.lift(f, &Subspace::from_spanning(f, &e));
    let kernel = realized.lift(f, &left_kernel(f, &e));
    debug_assert!(is_direct_sum(f, &[&image, &kernel], sub.space()));
    let mut parts = decompose_submodule(module, &Submodule::from_invariant(image))?;
    parts.extend(decompose_submodule(module, &Submodule::from_invariant(kernel))?);
    Ok(parts)
}

/// Indecomposable decomposition of the whole module.
pub fn indecomposable_summands(
    module: &RightModule,
) -> Result<DirectSumDecomposition, ModuleError> {
    let parts = decompose_submodule(module, &module.full_submodule())?;
    let decomp = DirectSumDecomposition { parts };
    debug_assert!(decomp.is_direct_sum_of(module.field(), &module.full_space()));
    Ok(decomp)
}

/// Certifies that the endomorphism ring of a (standalone) module is
/// local by checking that every endomorphism is invertible or
/// nilpotent. For a finite ring that dichotomy forces a unique maximal
/// ideal.
pub fn has_local_endomorphism_ring(module: &RightModule) -> Result<bool, ModuleError> {
    let f = module.field();
    let basis = endomorphism_basis(module);
    let p = f.modulus() as u64;
    let Some(total) = checked_power(p, basis.len() as u32) else {
        return Err(ModuleError::CapExceeded);
    };
    let n = module.dim();
    let mut coeffs = vec![0u32; basis.len()];
    for idx in 0..total {
        let mut rest = idx;
        for c in coeffs.iter_mut() {
            *c = (rest % p) as u32;
            rest /= p;
        }
        let phi = combine(f, &basis, &coeffs);
        if phi.is_invertible(f) {
            continue;
        }
        // nilpotency index of an n×n map is at most n
        let mut power = Mat::identity(n);
        for _ in 0..n {
            power = power.mul(f, &phi);
        }
        if !power.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One exchange pass: given `module = m ⊕ B ⊕ c` (for some `B`, found
/// internally) and a second decomposition `module = ⊕ parts ⊕ c`,
/// produces for each part `A_i` a splitting `A_i = D_i ⊕ E_i` such
/// that `module = m ⊕ ⊕ D_i ⊕ c`.
///
/// `m` is first decomposed into indecomposables with certified local
/// endomorphism rings; each indecomposable is then exchanged into the
/// running decomposition by locating a part whose component map is
/// invertible and shrinking that part.
pub fn exchange_step(
    module: &RightModule,
    m: &Submodule,
    c: &Submodule,
    parts: &[Submodule],
) -> Result<Vec<(Submodule, Submodule)>, ModuleError> {
    let f = module.field();
    let n = module.dim();
    let full = module.full_space();
    let mc = m.space().sum(f, c.space());
    if mc.dim() != m.dim() + c.dim() {
        return Err(ModuleError::SumNotDirect);
    }
    let b = complement(module, &Submodule::from_invariant(mc))?;
    {
        let mut spans: Vec<&Subspace> = parts.iter().map(Submodule::space).collect();
        spans.push(c.space());
        if !is_direct_sum(f, &spans, &full) {
            return Err(ModuleError::SumNotDirect);
        }
    }
    let ns = decompose_submodule(module, m)?;
    for nt in &ns {
        if !has_local_endomorphism_ring(&realize(module, nt).module)? {
            return Err(ModuleError::Internal(
                "indecomposable summand with non-local endomorphism ring".to_string(),
            ));
        }
    }
    // fixed projections q_t: onto N_t along the original decomposition
    let orig_stack = {
        let mut rows: Vec<&Mat> = ns.iter().map(Submodule::basis).collect();
        rows.push(b.basis());
        rows.push(c.basis());
        Mat::vstack(&rows)
    };
    let orig_inv = orig_stack
        .inverse(f)
        .ok_or_else(|| ModuleError::Internal("original decomposition stack is singular".to_string()))?;
    let mut offset_t = 0usize;
    let mut kept: Vec<Submodule> = Vec::new();
    let mut rems: Vec<Subspace> = parts.iter().map(|s| s.space().clone()).collect();
    for nt in &ns {
        let dn = nt.dim();
        let q = orig_inv.block(0..n, offset_t..offset_t + dn);
        offset_t += dn;
        let ker_q = left_kernel(f, &q);
        // current decomposition: kept ⊕ rems ⊕ c
        let cur_stack = {
            let mut rows: Vec<&Mat> = kept.iter().map(Submodule::basis).collect();
            for r in &rems {
                rows.push(r.basis());
            }
            rows.push(c.basis());
            Mat::vstack(&rows)
        };
        let cur_inv = cur_stack
            .inverse(f)
            .ok_or_else(|| ModuleError::Internal("current decomposition stack is singular".to_string()))?;
        let kept_total: usize = kept.iter().map(Submodule::dim).sum();
        let mut chosen = None;
        let mut off = kept_total;
        for (s, rem) in rems.iter().enumerate() {
            let ds = rem.dim();
            // component of N_t landing in this part, read back in N_t
            let through = nt
                .basis()
                .mul(f, &cur_inv.block(0..n, off..off + ds))
                .mul(f, rem.basis())
                .mul(f, &q);
            if through.is_invertible(f) {
                chosen = Some(s);
                break;
            }
            off += ds;
        }
        let Some(s) = chosen else {
            return Err(ModuleError::Internal(
                "no part carries an invertible component of the summand".to_string(),
            ));
        };
        rems[s] = rems[s].intersect(f, &ker_q);
        kept.push(nt.clone());
        let mut spans: Vec<&Subspace> = kept.iter().map(Submodule::space).collect();
        spans.extend(rems.iter());
        spans.push(c.space());
        if !is_direct_sum(f, &spans, &full) {
            return Err(ModuleError::Internal(
                "exchange update broke the decomposition".to_string(),
            ));
        }
    }
    // assemble the per-part splittings
    let mut out = Vec::with_capacity(parts.len());
    for (i, part) in parts.iter().enumerate() {
        let d_i = rems[i].clone();
        if !part.space().contains_space(f, &d_i) {
            return Err(ModuleError::Internal(
                "shrunken part left its original summand".to_string(),
            ));
        }
        // E_i = A_i ∩ (m ⊕ ⊕_{j≠i} D_j ⊕ c)
        let mut rest = m.space().sum(f, c.space());
        for (j, other) in rems.iter().enumerate() {
            if j != i {
                rest = rest.sum(f, other);
            }
        }
        let e_i = part.space().intersect(f, &rest);
        if !is_direct_sum(f, &[&d_i, &e_i], part.space()) {
            return Err(ModuleError::Internal(
                "part does not split along the exchanged piece".to_string(),
            ));
        }
        out.push((
            Submodule::from_invariant(d_i),
            Submodule::from_invariant(e_i),
        ));
    }
    let mut spans: Vec<&Subspace> = vec![m.space()];
    for (d, _) in &out {
        spans.push(d.space());
    }
    spans.push(c.space());
    if !is_direct_sum(f, &spans, &full) {
        return Err(ModuleError::Internal(
            "final exchanged decomposition does not recover the module".to_string(),
        ));
    }
    Ok(out)
}
