//! Inductive right-ideal decomposition chains.
//!
//! For a regular element `a` with right annihilator `K`, both builders
//! produce, level by level, right ideals `A_j`, `A_j'`, `Y_j` with
//!
//! ```text
//! R = K (+) (A_1 (+) ... (+) A_j) (+) Y_j
//!   = (A_1 (+) ... (+) A_j) (+) E_j (+) a*Y_j,
//! ```
//!
//! where `Y_j` lies inside `a^j R`, `E_j = A_j' (+) a*A_j` is
//! isomorphic to `R/aR`, and consecutive levels glue through
//! `E_j = A_{j+1} (+) A_{j+1}'`. The two variants advance differently:
//!
//! * [`ChainVariant::Exchange`] replaces `K` into the running
//!   decomposition with the exchange step at every level;
//! * [`ChainVariant::RegularPowers`] splits `K + a^j R` along the
//!   summand `K` (projective splitting) and needs every power of `a`
//!   regular.
//!
//! When `a^n = 0` the level-`n` data collapses `Y_n` to zero, the
//! chain yields an isomorphism `K -> R/aR`, and [`unit_witness`]
//! converts it into an explicit unit `u` with `a*u*a = a`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{Element, FiniteAlgebra};
use crate::linalg::{solve_vecmat, Mat, PrimeField, Subspace};
use crate::modules::{
    complement, complement_within, exchange_step, is_direct_sum, left_mult_image,
    principal_right_ideal, quotient, realize, regular_representation, right_annihilator,
    split_sum_along_summand, ModuleError, ModuleMap, QuotientModule, RightModule, Submodule,
};
use crate::regularity::{all_powers_regular, inner_inverses, power_data};

/// Which inductive construction produced a chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainVariant {
    /// Advance by exchanging `K` into the current decomposition.
    Exchange,
    /// Advance by splitting `K + a^j R` along `K`; requires every
    /// power of `a` to be regular.
    RegularPowers,
}

/// One level of a chain. All submodules live in the right regular
/// module; `iso` maps `e_part` (in its basis coordinates) onto the
/// canonical `R/aR` coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainLevel {
    /// 1-based level index `j`.
    pub index: u64,
    /// `A_j`.
    pub a_part: Submodule,
    /// `A_j'`.
    pub a_prime: Submodule,
    /// `Y_j`.
    pub y_part: Submodule,
    /// `E_j = A_j' (+) a*A_j`.
    pub e_part: Submodule,
    /// Isomorphism `E_j -> R/aR` in basis coordinates.
    pub iso: ModuleMap,
}

/// A full decomposition chain for one ring element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionChain {
    pub variant: ChainVariant,
    pub element: Element,
    /// The inner inverse fixed at construction time.
    pub inner_inverse: Element,
    /// `K`, the right annihilator of the element.
    pub annihilator: Submodule,
    /// Dimension of `R/aR`.
    pub quotient_dim: usize,
    pub levels: Vec<ChainLevel>,
}

impl DecompositionChain {
    /// `X_j = A_1 (+) ... (+) A_j` for the last level.
    pub fn x_space(&self, f: &PrimeField, ambient: usize) -> Subspace {
        let mut out = Subspace::zero(ambient);
        for lvl in &self.levels {
            out = out.sum(f, lvl.a_part.space());
        }
        out
    }

    pub fn last_level(&self) -> Option<&ChainLevel> {
        self.levels.last()
    }
}

/// Errors out of chain construction and witness extraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainError {
    /// The element is not regular.
    NotRegular,
    /// Some power of the element is not regular.
    PowersNotRegular { exponent: u64 },
    /// A chain needs at least one level.
    ZeroLevels,
    /// The element does not vanish at the chain length, so the
    /// unit-witness construction does not apply.
    NotNilpotentAtLevel { levels: u64 },
    /// Bubbled up from the module machinery.
    Module(ModuleError),
    /// A step guaranteed by theory failed its self-check; indicates a
    /// bug, never bad input.
    Verification(String),
}

impl core::fmt::Display for ChainError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ChainError::NotRegular => write!(f, "element is not regular"),
            ChainError::PowersNotRegular { exponent } => {
                write!(f, "power {exponent} of the element is not regular")
            }
            ChainError::ZeroLevels => write!(f, "chain must have at least one level"),
            ChainError::NotNilpotentAtLevel { levels } => {
                write!(f, "element is nonzero at power {levels}")
            }
            ChainError::Module(e) => write!(f, "module machinery failed: {e}"),
            ChainError::Verification(s) => write!(f, "construction self-check failed: {s}"),
        }
    }
}

impl core::error::Error for ChainError {}

impl From<ModuleError> for ChainError {
    fn from(e: ModuleError) -> Self {
        ChainError::Module(e)
    }
}

fn verr(msg: impl Into<String>) -> ChainError {
    ChainError::Verification(msg.into())
}

/// Suggested level count: the nilpotency index when the element is
/// nilpotent (the depth at which the chain conclusions activate).
pub fn default_level_count(alg: &FiniteAlgebra, a: &Element) -> Option<u64> {
    power_data(alg, a).nilpotency_index
}

/// Shared construction state.
struct Ctx<'a> {
    alg: &'a FiniteAlgebra,
    rr: RightModule,
    a: Element,
    x: Element,
    k: Submodule,
    a_ideal: Submodule,
    quo: QuotientModule,
    lam: Mat,
}

fn add_vec(f: &PrimeField, x: &[u32], y: &[u32]) -> Vec<u32> {
    x.iter().zip(y).map(|(&a, &b)| f.add(a, b)).collect()
}

impl<'a> Ctx<'a> {
    fn new(alg: &'a FiniteAlgebra, a: &Element) -> Result<Self, ChainError> {
        let x = inner_inverses(alg, a)
            .canonical()
            .ok_or(ChainError::NotRegular)?;
        let rr = regular_representation(alg);
        let k = right_annihilator(alg, a);
        let a_ideal = principal_right_ideal(alg, a);
        let quo = quotient(&rr, &a_ideal);
        let lam = alg.left_mul_matrix(a);
        Ok(Self {
            alg,
            rr,
            a: a.clone(),
            x,
            k,
            a_ideal,
            quo,
            lam,
        })
    }

    fn submodule(&self, space: Subspace) -> Result<Submodule, ChainError> {
        Ok(self.rr.submodule(space)?)
    }

    fn a_image(&self, s: &Submodule) -> Submodule {
        left_mult_image(self.alg, &self.a, s)
    }

    /// Assembles `E_j = A_j' (+) a*A_j` and its isomorphism onto
    /// `R/aR`, glued through the previous level when there is one.
    fn finish_level(
        &self,
        index: u64,
        a_part: Submodule,
        a_prime: Submodule,
        y_part: Submodule,
        prev: Option<&ChainLevel>,
    ) -> Result<ChainLevel, ChainError> {
        let f = self.alg.field();
        let a_image = self.a_image(&a_part);
        if a_image.dim() != a_part.dim() {
            return Err(verr(format!(
                "level {index}: left multiplication is not injective on A_{index}"
            )));
        }
        let e_space = a_prime.space().sum(f, a_image.space());
        if e_space.dim() != a_prime.dim() + a_image.dim() {
            return Err(verr(format!("level {index}: A_{index}' meets a*A_{index}")));
        }
        let e_part = self.submodule(e_space)?;
        let iso = self.level_iso(&e_part, &a_prime, &a_image, &a_part, prev, index)?;
        Ok(ChainLevel {
            index,
            a_part,
            a_prime,
            y_part,
            e_part,
            iso,
        })
    }

    /// The isomorphism `E_j -> R/aR`: split `v = v' + w` along
    /// `A_j' (+) a*A_j`, pull `w` back through left multiplication to
    /// `A_j`, and send `v' + a^{-1}w` either through the quotient
    /// projection (level 1, where `A_1' (+) A_1` complements `aR`) or
    /// through the previous level's isomorphism (`A_j' (+) A_j` equals
    /// `E_{j-1}` by the gluing identity).
    fn level_iso(
        &self,
        e_part: &Submodule,
        a_prime: &Submodule,
        a_image: &Submodule,
        a_part: &Submodule,
        prev: Option<&ChainLevel>,
        index: u64,
    ) -> Result<ModuleMap, ChainError> {
        let f = self.alg.field();
        let q = self.quo.module.dim();
        if e_part.dim() != q {
            return Err(verr(format!(
                "level {index}: E_{index} has dimension {} but R/aR has {q}",
                e_part.dim()
            )));
        }
        let split_stack = Mat::vstack(&[a_prime.basis(), a_image.basis()]);
        let pull = a_part.basis().mul(f, &self.lam);
        let mut rows = Vec::with_capacity(e_part.dim());
        for r in 0..e_part.dim() {
            let v = e_part.basis().row(r);
            let coords = solve_vecmat(f, &split_stack, v)
                .ok_or_else(|| verr(format!("level {index}: E_{index} vector fails to split")))?
                .particular;
            let (alpha, beta) = coords.split_at(a_prime.dim());
            let w = a_image.space().linear_combination(f, beta);
            let gamma = solve_vecmat(f, &pull, &w)
                .ok_or_else(|| verr(format!("level {index}: no preimage in A_{index}")))?
                .particular;
            let pulled = add_vec(
                f,
                &a_prime.space().linear_combination(f, alpha),
                &a_part.space().linear_combination(f, &gamma),
            );
            let image = match prev {
                None => self.quo.projection.apply_row(f, &pulled),
                Some(p) => {
                    let c = p.e_part.space().coords_of(f, &pulled).ok_or_else(|| {
                        verr(format!(
                            "level {index}: pulled vector leaves E_{}",
                            index - 1
                        ))
                    })?;
                    p.iso.matrix().apply_row(f, &c)
                }
            };
            rows.push(image);
        }
        let iso = ModuleMap::new(Mat::from_rows(q, &rows));
        let realized = realize(&self.rr, e_part);
        if !iso.is_module_map(&realized.module, &self.quo.module) || !iso.is_bijective(f) {
            return Err(verr(format!(
                "level {index}: constructed map E_{index} -> R/aR is not an isomorphism"
            )));
        }
        Ok(iso)
    }
}

/// Builds a chain with the requested variant.
pub fn build_chain(
    alg: &FiniteAlgebra,
    a: &Element,
    variant: ChainVariant,
    levels: u64,
) -> Result<DecompositionChain, ChainError> {
    match variant {
        ChainVariant::Exchange => exchange_chain(alg, a, levels),
        ChainVariant::RegularPowers => regular_powers_chain(alg, a, levels),
    }
}

/// Exchange-route chain: at every level the annihilator `K` is
/// exchanged into the current decomposition, shrinking its parts.
pub fn exchange_chain(
    alg: &FiniteAlgebra,
    a: &Element,
    levels: u64,
) -> Result<DecompositionChain, ChainError> {
    if levels == 0 {
        return Err(ChainError::ZeroLevels);
    }
    let ctx = Ctx::new(alg, a)?;
    let f = alg.field();
    let mut out: Vec<ChainLevel> = Vec::new();
    // the base decomposition R = A (+) aR with A the canonical
    // complement of the image
    let one_minus_ax = alg.sub(&alg.one(), &alg.mul(a, &ctx.x));
    let mut prev_e = principal_right_ideal(alg, &one_minus_ax);
    let mut prev_ay = ctx.a_ideal.clone();
    let mut x_space = Subspace::zero(ctx.rr.dim());
    for j in 1..=levels {
        let c = ctx.submodule(x_space.clone())?;
        let parts = [prev_e.clone(), prev_ay.clone()];
        let mut split = exchange_step(&ctx.rr, &ctx.k, &c, &parts)?.into_iter();
        let (a_part, a_prime) = split.next().expect("one splitting per part");
        let (y_part, _discard) = split.next().expect("one splitting per part");
        let lvl = ctx.finish_level(j, a_part, a_prime, y_part, out.last())?;
        x_space = x_space.sum(f, lvl.a_part.space());
        prev_e = lvl.e_part.clone();
        prev_ay = ctx.a_image(&lvl.y_part);
        out.push(lvl);
    }
    let chain = DecompositionChain {
        variant: ChainVariant::Exchange,
        element: a.clone(),
        inner_inverse: ctx.x.clone(),
        annihilator: ctx.k.clone(),
        quotient_dim: ctx.quo.module.dim(),
        levels: out,
    };
    confirm(alg, &chain)?;
    Ok(chain)
}

/// Regular-powers chain: at every level `K + a^j R` is split along
/// the summand `K`, then the previous `E` is split against the
/// accumulated complement.
pub fn regular_powers_chain(
    alg: &FiniteAlgebra,
    a: &Element,
    levels: u64,
) -> Result<DecompositionChain, ChainError> {
    if levels == 0 {
        return Err(ChainError::ZeroLevels);
    }
    if let Err(exponent) = all_powers_regular(alg, a) {
        return Err(ChainError::PowersNotRegular { exponent });
    }
    let ctx = Ctx::new(alg, a)?;
    let f = alg.field();
    let mut out: Vec<ChainLevel> = Vec::new();
    let mut power_ideal = ctx.a_ideal.clone();
    for j in 1..=levels {
        let p_sub = ctx.submodule(ctx.k.space().sum(f, power_ideal.space()))?;
        let (y_part, y_overlap) = split_sum_along_summand(&ctx.rr, &p_sub, &ctx.k, &power_ideal)?;
        let (a_part, a_prime) = match out.last() {
            None => {
                // base: K splits off its overlap with aR, and the rest
                // of R complements K + aR
                let a_prime = complement_within(&ctx.rr, &ctx.k, &y_overlap)?;
                let a_part = complement(&ctx.rr, &p_sub)?;
                if !is_direct_sum(
                    f,
                    &[y_overlap.space(), y_part.space()],
                    ctx.a_ideal.space(),
                ) {
                    return Err(verr("base level: aR is not (K meet aR) (+) Y_1"));
                }
                (a_part, a_prime)
            }
            Some(prev) => {
                // R = G + E_{j-1} with G = K (+) Y_j (+) A_1..A_{j-1};
                // split E_{j-1} along the summand G
                let mut g_space = ctx.k.space().sum(f, y_part.space());
                for l in &out {
                    g_space = g_space.sum(f, l.a_part.space());
                }
                let g = ctx.submodule(g_space)?;
                let full = ctx.rr.full_submodule();
                split_sum_along_summand(&ctx.rr, &full, &g, &prev.e_part)?
            }
        };
        let lvl = ctx.finish_level(j, a_part, a_prime, y_part, out.last())?;
        out.push(lvl);
        power_ideal = ctx.a_image(&power_ideal);
    }
    let chain = DecompositionChain {
        variant: ChainVariant::RegularPowers,
        element: a.clone(),
        inner_inverse: ctx.x.clone(),
        annihilator: ctx.k.clone(),
        quotient_dim: ctx.quo.module.dim(),
        levels: out,
    };
    confirm(alg, &chain)?;
    Ok(chain)
}

/// One named pass/fail entry of a verification report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainCheck {
    pub name: String,
    pub pass: bool,
}

/// Full verification report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub checks: Vec<ChainCheck>,
}

impl ChainReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&ChainCheck> {
        self.checks.iter().find(|c| !c.pass)
    }
}

/// Re-derives every claimed invariant of a chain from scratch: only
/// the stored bases and maps are trusted as claims, never as facts.
pub fn verify_chain(alg: &FiniteAlgebra, chain: &DecompositionChain) -> ChainReport {
    let f = alg.field();
    let a = &chain.element;
    let rr = regular_representation(alg);
    let k = right_annihilator(alg, a);
    let a_ideal = principal_right_ideal(alg, a);
    let quo = quotient(&rr, &a_ideal);
    let full = rr.full_space();
    let mut checks: Vec<ChainCheck> = Vec::new();
    let push = |name: String, pass: bool, checks: &mut Vec<ChainCheck>| {
        checks.push(ChainCheck { name, pass });
    };
    push(
        String::from("annihilator matches r(a)"),
        chain.annihilator == k,
        &mut checks,
    );
    push(
        String::from("inner inverse: a*x*a = a"),
        alg.mul(&alg.mul(a, &chain.inner_inverse), a) == *a,
        &mut checks,
    );
    push(
        String::from("quotient dimension matches dim R - dim aR"),
        chain.quotient_dim == quo.module.dim(),
        &mut checks,
    );
    let mut power_ideal = a_ideal.clone();
    for (li, lvl) in chain.levels.iter().enumerate() {
        let j = lvl.index;
        push(
            format!("L{j} index is consecutive"),
            j == li as u64 + 1,
            &mut checks,
        );
        for (nm, sub) in [
            ("a_part", &lvl.a_part),
            ("a_prime", &lvl.a_prime),
            ("y_part", &lvl.y_part),
            ("e_part", &lvl.e_part),
        ] {
            push(
                format!("L{j} {nm} is a submodule"),
                sub.space().ambient_dim() == rr.dim() && rr.is_invariant(sub.space()),
                &mut checks,
            );
        }
        let mut first: Vec<&Subspace> = alloc::vec![k.space()];
        for l in &chain.levels[..=li] {
            first.push(l.a_part.space());
        }
        first.push(lvl.y_part.space());
        push(
            format!("L{j} R = K (+) A_1..A_{j} (+) Y_{j}"),
            is_direct_sum(f, &first, &full),
            &mut checks,
        );
        let ay = left_mult_image(alg, a, &lvl.y_part);
        let mut second: Vec<&Subspace> =
            chain.levels[..=li].iter().map(|l| l.a_part.space()).collect();
        second.push(lvl.e_part.space());
        second.push(ay.space());
        push(
            format!("L{j} R = A_1..A_{j} (+) E_{j} (+) a*Y_{j}"),
            is_direct_sum(f, &second, &full),
            &mut checks,
        );
        push(
            format!("L{j} Y_{j} inside a^{j}R"),
            power_ideal.space().contains_space(f, lvl.y_part.space()),
            &mut checks,
        );
        let a_image = left_mult_image(alg, a, &lvl.a_part);
        push(
            format!("L{j} E_{j} = A_{j}' (+) a*A_{j}"),
            is_direct_sum(f, &[lvl.a_prime.space(), a_image.space()], lvl.e_part.space()),
            &mut checks,
        );
        let realized = realize(&rr, &lvl.e_part);
        let iso_ok = lvl.e_part.dim() == quo.module.dim()
            && lvl.iso.source_dim() == lvl.e_part.dim()
            && lvl.iso.target_dim() == quo.module.dim()
            && lvl.iso.is_module_map(&realized.module, &quo.module)
            && lvl.iso.is_bijective(f);
        push(
            format!("L{j} iso: E_{j} -> R/aR is a module isomorphism"),
            iso_ok,
            &mut checks,
        );
        if let Some(next) = chain.levels.get(li + 1) {
            let nj = j + 1;
            push(
                format!("L{j} glue: E_{j} = A_{nj} (+) A_{nj}'"),
                is_direct_sum(
                    f,
                    &[next.a_part.space(), next.a_prime.space()],
                    lvl.e_part.space(),
                ),
                &mut checks,
            );
        }
        if chain.variant == ChainVariant::RegularPowers {
            let from_sum = k.space().sum(f, power_ideal.space());
            let from_parts = k.space().sum(f, lvl.y_part.space());
            push(
                format!("L{j} K (+) Y_{j} = K + a^{j}R"),
                from_parts == from_sum
                    && from_parts.dim() == k.dim() + lvl.y_part.dim(),
                &mut checks,
            );
            let next_power = left_mult_image(alg, a, &power_ideal);
            push(
                format!("L{j} a*Y_{j} = a^{}R", j + 1),
                ay.space() == next_power.space(),
                &mut checks,
            );
        }
        power_ideal = left_mult_image(alg, a, &power_ideal);
    }
    push(
        String::from("y dimensions are non-increasing"),
        chain
            .levels
            .windows(2)
            .all(|w| w[1].y_part.dim() <= w[0].y_part.dim()),
        &mut checks,
    );
    ChainReport { checks }
}

/// Construction-time gate: a freshly built chain must verify.
fn confirm(alg: &FiniteAlgebra, chain: &DecompositionChain) -> Result<(), ChainError> {
    let report = verify_chain(alg, chain);
    match report.first_failure() {
        None => Ok(()),
        Some(c) => Err(verr(c.name.clone())),
    }
}

/// Composes the chain data into an isomorphism `K -> R/aR`: when the
/// final `Y` is zero, `R = X (+) E` and `K` projects bijectively onto
/// `E` along `X`; the level isomorphism finishes the trip.
pub fn annihilator_iso(
    alg: &FiniteAlgebra,
    chain: &DecompositionChain,
) -> Result<ModuleMap, ChainError> {
    let f = alg.field();
    let last = chain.levels.last().ok_or(ChainError::ZeroLevels)?;
    if last.y_part.dim() != 0 {
        return Err(verr("final level has a nonzero Y part"));
    }
    let rr = regular_representation(alg);
    let k = right_annihilator(alg, &chain.element);
    let a_ideal = principal_right_ideal(alg, &chain.element);
    let quo = quotient(&rr, &a_ideal);
    let mut rows: Vec<&Mat> = chain.levels.iter().map(|l| l.a_part.basis()).collect();
    rows.push(last.e_part.basis());
    let stack = Mat::vstack(&rows);
    if stack.rows() != rr.dim() {
        return Err(verr("X and E do not fill R"));
    }
    let inv = stack
        .inverse(f)
        .ok_or_else(|| verr("X (+) E stack is singular"))?;
    let x_dim: usize = chain.levels.iter().map(|l| l.a_part.dim()).sum();
    let mut out_rows = Vec::with_capacity(k.dim());
    for r in 0..k.dim() {
        let coords = inv.apply_row(f, k.basis().row(r));
        out_rows.push(last.iso.matrix().apply_row(f, &coords[x_dim..]));
    }
    let iso = ModuleMap::new(Mat::from_rows(quo.module.dim(), &out_rows));
    let realized_k = realize(&rr, &k);
    let ok = k.dim() == quo.module.dim()
        && iso.is_module_map(&realized_k.module, &quo.module)
        && iso.is_bijective(f);
    if !ok {
        return Err(verr("composite K -> R/aR is not an isomorphism"));
    }
    Ok(iso)
}

/// A verified unit witness of unit-regularity extracted from a chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitWitness {
    pub unit: Element,
    pub unit_inverse: Element,
    /// The isomorphism `K -> R/aR` the unit came from.
    pub iso: ModuleMap,
}

/// Converts a chain on a nilpotent element into an explicit unit `u`
/// with `a*u*a = a`. Requires `a` to vanish at the chain length (which
/// forces the final `Y` to zero).
pub fn unit_witness(
    alg: &FiniteAlgebra,
    chain: &DecompositionChain,
) -> Result<UnitWitness, ChainError> {
    let levels = chain.levels.len() as u64;
    if levels == 0 {
        return Err(ChainError::ZeroLevels);
    }
    if !alg.pow(&chain.element, levels).is_zero() {
        return Err(ChainError::NotNilpotentAtLevel { levels });
    }
    let iso = annihilator_iso(alg, chain)?;
    let a = &chain.element;
    let u = crate::regularity::unit_from_annihilator_isomorphism(
        alg,
        a,
        &chain.inner_inverse,
        &iso,
    )
    .ok_or_else(|| verr("isomorphism did not convert into a unit"))?;
    let unit_inverse = alg
        .try_inverse(&u)
        .ok_or_else(|| verr("produced witness is not invertible"))?;
    if alg.mul(&alg.mul(a, &u), a) != *a {
        return Err(verr("witness fails a*u*a = a"));
    }
    // cross-check against the enumerated inner inverse set when small
    let inn = inner_inverses(alg, a);
    if let Some(count) = inn.count(alg) {
        if count <= 1 << 12 && !(0..count).any(|i| inn.at(alg, i) == u) {
            return Err(verr("witness missing from the enumerated inner inverses"));
        }
    }
    Ok(UnitWitness {
        unit: u,
        unit_inverse,
        iso,
    })
}
