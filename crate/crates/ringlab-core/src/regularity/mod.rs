//! Regularity notions for elements of a finite algebra.
//!
//! An element `a` is regular when `a·x·a = a` has a solution, and
//! unit-regular when some solution is a unit. Unit-regularity is
//! decided by two independent routes:
//!
//! * a direct scan of the solution set of `a·x·a = a` for a unit;
//! * a structural route: for regular `a`, a unit inner inverse exists
//!   exactly when the right annihilator `r(a)` and the factor module
//!   `R/aR` are isomorphic, and an isomorphism converts into an
//!   explicit unit.
//!
//! Both routes produce a verified certificate `a·u·a = a`; the test
//! suites cross-check that the routes agree wherever both conclude.

mod sr1;

pub use sr1::{
    ring_has_stable_range_one, sr1_context, sr1_scan_range, Sr1Context, Sr1Counterexample,
    Sr1Options, Sr1Outcome, Sr1Report,
};

use alloc::vec::Vec;

use crate::algebra::{AlgebraError, Element, FiniteAlgebra};
use crate::linalg::{solve_vecmat, AffineSolution, Mat, Subspace};
use crate::modules::{
    find_isomorphism, is_direct_sum, principal_right_ideal, quotient, realize,
    regular_representation, right_annihilator, IsoSearch, ModuleMap,
};

/// The solution set of `a·x·a = a`.
#[derive(Debug, Clone)]
pub struct InnerInverses {
    element: Element,
    solutions: Option<AffineSolution>,
}

/// Solves `a·x·a = a` exactly. The solution set is empty exactly when
/// `a` is not regular.
pub fn inner_inverses(alg: &FiniteAlgebra, a: &Element) -> InnerInverses {
    let f = alg.field();
    let m = alg.left_mul_matrix(a).mul(f, &alg.right_mul_matrix(a));
    InnerInverses {
        element: a.clone(),
        solutions: solve_vecmat(f, &m, a.coords()),
    }
}

impl InnerInverses {
    pub fn is_regular(&self) -> bool {
        self.solutions.is_some()
    }

    /// The canonical inner inverse (free variables zero), if any.
    pub fn canonical(&self) -> Option<Element> {
        self.solutions
            .as_ref()
            .map(|s| Element::from_coords(s.particular.clone()))
    }

    /// Number of inner inverses: 0 when not regular, `None` when the
    /// solution set is larger than the enumeration cap.
    pub fn count(&self, alg: &FiniteAlgebra) -> Option<u64> {
        match &self.solutions {
            None => Some(0),
            Some(s) => s.count(alg.field()),
        }
    }

    /// The `idx`-th inner inverse in canonical enumeration order.
    pub fn at(&self, alg: &FiniteAlgebra, idx: u64) -> Element {
        let s = self.solutions.as_ref().expect("element is regular");
        Element::from_coords(s.at(alg.field(), idx))
    }

    pub fn element(&self) -> &Element {
        &self.element
    }

    /// Direct check that `x` really is an inner inverse.
    pub fn verify(alg: &FiniteAlgebra, a: &Element, x: &Element) -> bool {
        alg.mul(&alg.mul(a, x), a) == *a
    }
}

/// Outcome of scanning the inner inverse set for a unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScanOutcome {
    NotRegular,
    /// First unit inner inverse in canonical enumeration order.
    FoundUnit(Element),
    /// Exhaustive scan found no unit.
    NoneExhaustive,
    /// Solution set larger than the cap; nothing concluded.
    OverCap,
}

/// Route one: enumerate `{x : a·x·a = a}` and return the first unit.
pub fn scan_for_unit_inner_inverse(alg: &FiniteAlgebra, a: &Element) -> ScanOutcome {
    let inn = inner_inverses(alg, a);
    if !inn.is_regular() {
        return ScanOutcome::NotRegular;
    }
    let Some(count) = inn.count(alg) else {
        return ScanOutcome::OverCap;
    };
    for idx in 0..count {
        let x = inn.at(alg, idx);
        if alg.is_unit(&x) {
            debug_assert!(InnerInverses::verify(alg, a, &x));
            return ScanOutcome::FoundUnit(x);
        }
    }
    ScanOutcome::NoneExhaustive
}

/// Outcome of the structural route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructuralOutcome {
    NotRegular,
    /// `r(a) ≅ R/aR`; carries the isomorphism and the unit derived
    /// from it.
    Isomorphic { iso: ModuleMap, unit: Element },
    NotIsomorphic,
    Undetermined,
}

/// Route two: decide whether `r(a) ≅ R/aR` and convert an isomorphism
/// into a verified unit inner inverse.
pub fn structural_unit_regularity(alg: &FiniteAlgebra, a: &Element) -> StructuralOutcome {
    let inn = inner_inverses(alg, a);
    let Some(x) = inn.canonical() else {
        return StructuralOutcome::NotRegular;
    };
    let rr = regular_representation(alg);
    let ann = right_annihilator(alg, a);
    let ideal = principal_right_ideal(alg, a);
    let ann_module = realize(&rr, &ann).module;
    let quo_module = quotient(&rr, &ideal).module;
    match find_isomorphism(&ann_module, &quo_module) {
        IsoSearch::Found(iso) => {
            let unit = unit_from_annihilator_isomorphism(alg, a, &x, &iso)
                .expect("a verified isomorphism always converts into a unit");
            StructuralOutcome::Isomorphic { iso, unit }
        }
        IsoSearch::NotIsomorphic => StructuralOutcome::NotIsomorphic,
        IsoSearch::Undetermined => StructuralOutcome::Undetermined,
    }
}

/// Builds a unit `u` with `a·u·a = a` out of an isomorphism
/// `iso: r(a) → R/aR` (in the canonical coordinates of those modules)
/// and an inner inverse `x`.
///
/// The unit is the inverse of the module automorphism of `R_R` acting
/// as left multiplication by `a` on `xaR` and carrying `r(a)` onto the
/// complement `(1−ax)R` through the isomorphism. Returns `None` only
/// if the inputs are inconsistent; the result is always verified.
pub fn unit_from_annihilator_isomorphism(
    alg: &FiniteAlgebra,
    a: &Element,
    x: &Element,
    iso: &ModuleMap,
) -> Option<Element> {
    let f = alg.field();
    let n = alg.dim();
    if n == 0 {
        return Some(alg.zero());
    }
    if alg.mul(&alg.mul(a, x), a) != *a {
        return None;
    }
    let full = Subspace::full(n);
    let ideal = principal_right_ideal(alg, a);
    let ann = right_annihilator(alg, a);
    let q = n - ideal.dim();
    if iso.source_dim() != ann.dim() || iso.target_dim() != q {
        return None;
    }
    let xa_ideal = principal_right_ideal(alg, &alg.mul(x, a));
    let cmpl = principal_right_ideal(alg, &alg.sub(&alg.one(), &alg.mul(a, x)));
    if !is_direct_sum(f, &[xa_ideal.space(), ann.space()], &full)
        || !is_direct_sum(f, &[ideal.space(), cmpl.space()], &full)
    {
        return None;
    }
    let rr = regular_representation(alg);
    let quo = quotient(&rr, &ideal);
    // the projection restricted to the complement of aR is invertible
    let proj_restricted = cmpl.basis().mul(f, &quo.projection);
    let proj_inv = proj_restricted.inverse(f)?;
    let top = xa_ideal.basis().mul(f, &alg.left_mul_matrix(a));
    let bottom = iso.matrix().mul(f, &proj_inv).mul(f, cmpl.basis());
    let stack = Mat::vstack(&[xa_ideal.basis(), ann.basis()]);
    let theta = stack.inverse(f)?.mul(f, &Mat::vstack(&[&top, &bottom]));
    let theta_inv = theta.inverse(f)?;
    let u = Element::from_coords(theta_inv.apply_row(f, alg.one().coords()));
    alg.try_inverse(&u)?;
    if alg.mul(&alg.mul(a, &u), a) != *a {
        return None;
    }
    Some(u)
}

/// A verified unit-regularity certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitRegularCertificate {
    pub element: Element,
    /// Unit with `a·u·a = a`.
    pub unit: Element,
    pub unit_inverse: Element,
    /// Isomorphism `r(a) → R/aR` when the structural route concluded.
    pub annihilator_iso: Option<ModuleMap>,
}

/// Combined verdict on unit-regularity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnitRegularity {
    Certified(UnitRegularCertificate),
    NotRegular,
    NotUnitRegular,
    /// Both routes ran out of budget (only possible above the caps).
    Undetermined,
}

impl UnitRegularity {
    pub fn is_certified(&self) -> bool {
        matches!(self, UnitRegularity::Certified(_))
    }
}

/// Decides unit-regularity, running the scan route first and the
/// structural route as independent evidence.
pub fn unit_regularity(alg: &FiniteAlgebra, a: &Element) -> UnitRegularity {
    let scan = scan_for_unit_inner_inverse(alg, a);
    if scan == ScanOutcome::NotRegular {
        return UnitRegularity::NotRegular;
    }
    let structural = structural_unit_regularity(alg, a);
    let certify = |unit: Element, iso: Option<ModuleMap>| {
        let unit_inverse = alg.try_inverse(&unit).expect("certified unit is invertible");
        UnitRegularity::Certified(UnitRegularCertificate {
            element: a.clone(),
            unit,
            unit_inverse,
            annihilator_iso: iso,
        })
    };
    match (scan, structural) {
        (ScanOutcome::FoundUnit(u), StructuralOutcome::Isomorphic { iso, .. }) => {
            certify(u, Some(iso))
        }
        (ScanOutcome::FoundUnit(u), _) => certify(u, None),
        (ScanOutcome::NoneExhaustive, structural) => {
            // an exhaustive scan is conclusive; the structural route can
            // only agree
            debug_assert!(!matches!(structural, StructuralOutcome::Isomorphic { .. }));
            UnitRegularity::NotUnitRegular
        }
        (ScanOutcome::OverCap, StructuralOutcome::Isomorphic { iso, unit }) => {
            certify(unit, Some(iso))
        }
        (ScanOutcome::OverCap, StructuralOutcome::NotIsomorphic) => UnitRegularity::NotUnitRegular,
        (ScanOutcome::OverCap, _) => UnitRegularity::Undetermined,
        (ScanOutcome::NotRegular, _) => unreachable!("handled above"),
    }
}

/// Power behaviour of an element: the first repetition `a^i = a^j`
/// (`i < j` minimal) and the nilpotency index if some power vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerData {
    /// Least `m ≥ 1` with `a^m = 0`, if any.
    pub nilpotency_index: Option<u64>,
    /// `(i, j)` with `i < j` minimal and `a^i = a^j`.
    pub cycle: (u64, u64),
}

impl PowerData {
    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_index.is_some()
    }
}

/// Walks the powers `a^0, a^1, ...` until the first repetition.
pub fn power_data(alg: &FiniteAlgebra, a: &Element) -> PowerData {
    let mut seen: alloc::collections::BTreeMap<Element, u64> = alloc::collections::BTreeMap::new();
    let mut nilpotency_index = None;
    let mut current = alg.one();
    let mut exponent = 0u64;
    loop {
        if let Some(&first) = seen.get(&current) {
            return PowerData {
                nilpotency_index,
                cycle: (first, exponent),
            };
        }
        if exponent >= 1 && current.is_zero() && nilpotency_index.is_none() {
            nilpotency_index = Some(exponent);
        }
        seen.insert(current.clone(), exponent);
        current = alg.mul(&current, a);
        exponent += 1;
    }
}

/// Least `n ≥ 0` with `a^n R = a^{n+1} R` and `R a^n = R a^{n+1}`.
/// Since the chains descend, equality of dimensions suffices.
pub fn strongly_pi_regular_index(alg: &FiniteAlgebra, a: &Element) -> u64 {
    let f = alg.field();
    let right = |k: u64| {
        let m = alg.left_mul_matrix(&alg.pow(a, k));
        Subspace::from_spanning(f, &m).dim()
    };
    let left = |k: u64| {
        let m = alg.right_mul_matrix(&alg.pow(a, k));
        Subspace::from_spanning(f, &m).dim()
    };
    let mut n = 0u64;
    loop {
        if right(n) == right(n + 1) && left(n) == left(n + 1) {
            return n;
        }
        n += 1;
    }
}

/// Checks that every power `a^k` is regular. Exponents past the first
/// repetition revisit earlier powers, so the scan is finite. Returns
/// the first failing exponent on failure.
pub fn all_powers_regular(alg: &FiniteAlgebra, a: &Element) -> Result<u64, u64> {
    let data = power_data(alg, a);
    let bound = data.cycle.1;
    for k in 1..=bound {
        let power = alg.pow(a, k);
        if !inner_inverses(alg, &power).is_regular() {
            return Err(k);
        }
    }
    Ok(bound)
}

/// Splitting of an element along the idempotent power `e = a^m`:
/// `a = eae + (1−e)a(1−e)` with the first part invertible in `eRe` and
/// the second nilpotent in `(1−e)R(1−e)`.
#[derive(Debug, Clone)]
pub struct SplitData {
    /// Least `m ≥ 1` with `a^m` idempotent.
    pub exponent: u64,
    pub idempotent: Element,
    pub unit_corner: crate::algebra::CornerData,
    pub nil_corner: crate::algebra::CornerData,
    /// `e·a·e` in the coordinates of `eRe`; invertible there.
    pub unit_part: Element,
    /// `(1−e)·a·(1−e)` in the coordinates of `(1−e)R(1−e)`; nilpotent
    /// there.
    pub nil_part: Element,
}

/// Computes the idempotent-power splitting. Total on finite rings: the
/// power sequence is eventually periodic and its cycle contains an
/// idempotent.
pub fn idempotent_power_split(alg: &FiniteAlgebra, a: &Element) -> SplitData {
    let data = power_data(alg, a);
    let bound = 2 * data.cycle.1 + 2;
    let mut exponent = None;
    for m in 1..=bound {
        if alg.pow(a, 2 * m) == alg.pow(a, m) {
            exponent = Some(m);
            break;
        }
    }
    let exponent = exponent.expect("the power cycle contains an idempotent");
    let e = alg.pow(a, exponent);
    debug_assert!(alg.is_idempotent(&e));
    debug_assert!(alg.commutes(&e, a));
    let complement = alg.sub(&alg.one(), &e);
    let unit_corner = alg.corner_algebra(&e).expect("a^m is idempotent");
    let nil_corner = alg
        .corner_algebra(&complement)
        .expect("1 - a^m is idempotent");
    let unit_part = unit_corner.project(alg, a);
    let nil_part = nil_corner.project(alg, a);
    let out = SplitData {
        exponent,
        idempotent: e,
        unit_corner,
        nil_corner,
        unit_part,
        nil_part,
    };
    debug_assert!(verify_split(alg, a, &out));
    out
}

/// Independent check of every claim in a [`SplitData`].
pub fn verify_split(alg: &FiniteAlgebra, a: &Element, split: &SplitData) -> bool {
    let e = &split.idempotent;
    if !alg.is_idempotent(e) || *e != alg.pow(a, split.exponent) {
        return false;
    }
    if !alg.commutes(e, a) {
        return false;
    }
    // minimality of the exponent
    for m in 1..split.exponent {
        if alg.pow(a, 2 * m) == alg.pow(a, m) {
            return false;
        }
    }
    // the two compressed parts reassemble to a
    let assembled = alg.add(
        &split.unit_corner.embed(&split.unit_part),
        &split.nil_corner.embed(&split.nil_part),
    );
    if assembled != *a {
        return false;
    }
    // unit part invertible in its corner
    if split.unit_corner.algebra().try_inverse(&split.unit_part).is_none() {
        return false;
    }
    // nil part nilpotent in its corner
    let nc = split.nil_corner.algebra();
    let mut power = nc.one();
    let mut nilpotent = nc.dim() == 0;
    for _ in 0..=nc.dim() {
        power = nc.mul(&power, &split.nil_part);
        if power.is_zero() {
            nilpotent = true;
            break;
        }
    }
    nilpotent
}

/// Three-valued answer for properties that may exceed search budgets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trilean {
    True,
    False,
    Unknown,
}

/// Everything the classifier records about one element.
#[derive(Debug, Clone)]
pub struct ElementProfile {
    pub index: u64,
    pub element: Element,
    pub is_unit: bool,
    pub is_idempotent: bool,
    pub is_nilpotent: bool,
    pub nilpotency_index: Option<u64>,
    pub spr_index: u64,
    pub is_regular: bool,
    pub is_unit_regular: Trilean,
    pub ideal_dim: usize,
    pub annihilator_dim: usize,
}

/// Classifies a single element.
pub fn profile_element(alg: &FiniteAlgebra, a: &Element) -> ElementProfile {
    let f = alg.field();
    let power = power_data(alg, a);
    let inn = inner_inverses(alg, a);
    let is_unit_regular = if inn.is_regular() {
        match unit_regularity(alg, a) {
            UnitRegularity::Certified(_) => Trilean::True,
            UnitRegularity::NotUnitRegular => Trilean::False,
            UnitRegularity::Undetermined => Trilean::Unknown,
            UnitRegularity::NotRegular => unreachable!("element is regular"),
        }
    } else {
        Trilean::False
    };
    ElementProfile {
        index: alg.index_of(a),
        element: a.clone(),
        is_unit: alg.is_unit(a),
        is_idempotent: alg.is_idempotent(a),
        is_nilpotent: power.is_nilpotent(),
        nilpotency_index: power.nilpotency_index,
        spr_index: strongly_pi_regular_index(alg, a),
        is_regular: inn.is_regular(),
        is_unit_regular,
        ideal_dim: Subspace::from_spanning(f, &alg.left_mul_matrix(a)).dim(),
        annihilator_dim: right_annihilator(alg, a).dim(),
    }
}

/// Internal consistency of a profile (implications between the flags).
pub fn profile_is_consistent(alg: &FiniteAlgebra, p: &ElementProfile) -> bool {
    let dim = alg.dim();
    if p.is_unit && p.is_nilpotent && dim > 0 {
        return false;
    }
    if p.is_unit && (!p.is_regular || p.is_unit_regular != Trilean::True || p.spr_index != 0) {
        return false;
    }
    if p.is_idempotent && (!p.is_regular || p.is_unit_regular != Trilean::True) {
        return false;
    }
    if p.is_nilpotent != p.nilpotency_index.is_some() {
        return false;
    }
    if p.is_unit_regular == Trilean::True && !p.is_regular {
        return false;
    }
    if p.ideal_dim + p.annihilator_dim != dim {
        return false;
    }
    true
}

/// Classification of a contiguous index range of ring elements.
pub fn classify_range(alg: &FiniteAlgebra, start: u64, end: u64) -> Vec<ElementProfile> {
    (start..end)
        .map(|idx| profile_element(alg, &alg.element_at(idx)))
        .collect()
}

/// Aggregate counts over a full classification.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClassifySummary {
    pub total: u64,
    pub units: u64,
    pub idempotents: u64,
    pub nilpotents: u64,
    pub regular: u64,
    pub unit_regular: u64,
    pub unit_regular_unknown: u64,
}

impl ClassifySummary {
    pub fn absorb(&mut self, p: &ElementProfile) {
        self.total += 1;
        self.units += p.is_unit as u64;
        self.idempotents += p.is_idempotent as u64;
        self.nilpotents += p.is_nilpotent as u64;
        self.regular += p.is_regular as u64;
        self.unit_regular += (p.is_unit_regular == Trilean::True) as u64;
        self.unit_regular_unknown += (p.is_unit_regular == Trilean::Unknown) as u64;
    }
}

/// Classifies every element of the ring.
pub fn classify_all(
    alg: &FiniteAlgebra,
) -> Result<(ClassifySummary, Vec<ElementProfile>), AlgebraError> {
    let count = alg.element_count().ok_or(AlgebraError::CapExceeded)?;
    let profiles = classify_range(alg, 0, count);
    let mut summary = ClassifySummary::default();
    for p in &profiles {
        summary.absorb(p);
    }
    Ok((summary, profiles))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::preset;

    #[test]
    fn inner_inverses_of_e12_in_m2() {
        let r = preset("M(2,2)").unwrap();
        let e12 = r.basis_element(1);
        let inn = inner_inverses(&r, &e12);
        assert!(inn.is_regular());
        // oracle: brute force over all 16 elements
        let brute: Vec<Element> = (0..16)
            .map(|i| r.element_at(i))
            .filter(|x| InnerInverses::verify(&r, &e12, x))
            .collect();
        assert_eq!(brute.len(), 8);
        assert_eq!(inn.count(&r), Some(8));
        let mut enumerated: Vec<Element> = (0..8).map(|i| inn.at(&r, i)).collect();
        for x in &enumerated {
            assert!(InnerInverses::verify(&r, &e12, x));
        }
        enumerated.sort();
        let mut brute = brute;
        brute.sort();
        assert_eq!(enumerated, brute);
        // the canonical solution is e21
        assert_eq!(inn.canonical().unwrap(), r.basis_element(2));
    }

    #[test]
    fn non_regular_elements_have_no_inner_inverses() {
        let t = preset("T(2,2)").unwrap();
        let e12 = t.basis_element(1);
        let inn = inner_inverses(&t, &e12);
        assert!(!inn.is_regular());
        assert_eq!(inn.count(&t), Some(0));
        // oracle: brute force over all 8 elements
        assert!((0..8).all(|i| !InnerInverses::verify(&t, &e12, &t.element_at(i))));
    }

    #[test]
    fn scan_finds_the_swap_unit_for_e12() {
        let r = preset("M(2,2)").unwrap();
        let e12 = r.basis_element(1);
        match scan_for_unit_inner_inverse(&r, &e12) {
            ScanOutcome::FoundUnit(u) => {
                // first unit in canonical order is e12 + e21
                assert_eq!(u, r.add(&r.basis_element(1), &r.basis_element(2)));
            }
            other => panic!("expected a unit, got {other:?}"),
        }
    }

    #[test]
    fn both_routes_agree_on_small_examples() {
        let r = preset("M(2,2)").unwrap();
        for idx in 0..16 {
            let a = r.element_at(idx);
            let scan = scan_for_unit_inner_inverse(&r, &a);
            let structural = structural_unit_regularity(&r, &a);
            match (&scan, &structural) {
                (ScanOutcome::NotRegular, StructuralOutcome::NotRegular) => {}
                (ScanOutcome::FoundUnit(_), StructuralOutcome::Isomorphic { unit, .. }) => {
                    assert!(InnerInverses::verify(&r, &a, unit));
                    assert!(r.is_unit(unit));
                }
                (ScanOutcome::NoneExhaustive, StructuralOutcome::NotIsomorphic) => {}
                other => panic!("routes disagree on index {idx}: {other:?}"),
            }
        }
    }

    #[test]
    fn zero_is_unit_regular_with_the_identity_witness() {
        let r = preset("FpC(2,2)").unwrap();
        match scan_for_unit_inner_inverse(&r, &r.zero()) {
            ScanOutcome::FoundUnit(u) => assert_eq!(u, r.one()),
            other => panic!("expected a unit, got {other:?}"),
        }
        match unit_regularity(&r, &r.zero()) {
            UnitRegularity::Certified(cert) => {
                assert_eq!(cert.unit, r.one());
                assert!(cert.annihilator_iso.is_some());
            }
            other => panic!("expected certification, got {other:?}"),
        }
    }

    #[test]
    fn one_plus_g_is_not_regular_in_the_group_algebra() {
        let r = preset("FpC(2,2)").unwrap();
        let a = r.add(&r.one(), &r.basis_element(1));
        let data = power_data(&r, &a);
        assert_eq!(data.nilpotency_index, Some(2));
        assert_eq!(unit_regularity(&r, &a), UnitRegularity::NotRegular);
    }

    #[test]
    fn power_data_examples() {
        let r = preset("M(3,2)").unwrap();
        let j = r.add(&r.basis_element(1), &r.basis_element(5));
        let data = power_data(&r, &j);
        assert_eq!(data.nilpotency_index, Some(3));
        assert_eq!(data.cycle, (3, 4));
        // a unit of order 2 repeats at the identity
        let m2 = preset("M(2,2)").unwrap();
        let swap = m2.add(&m2.basis_element(1), &m2.basis_element(2));
        let data = power_data(&m2, &swap);
        assert_eq!(data.nilpotency_index, None);
        assert_eq!(data.cycle, (0, 2));
        // zero
        let data = power_data(&m2, &m2.zero());
        assert_eq!(data.nilpotency_index, Some(1));
        assert_eq!(data.cycle, (1, 2));
    }

    #[test]
    fn strongly_pi_regular_index_examples() {
        let r = preset("M(3,2)").unwrap();
        let j = r.add(&r.basis_element(1), &r.basis_element(5));
        assert_eq!(strongly_pi_regular_index(&r, &j), 3);
        assert_eq!(strongly_pi_regular_index(&r, &r.one()), 0);
        assert_eq!(strongly_pi_regular_index(&r, &r.zero()), 1);
        let t = preset("FpC(2,2)").unwrap();
        let a = t.add(&t.one(), &t.basis_element(1));
        assert_eq!(strongly_pi_regular_index(&t, &a), 2);
    }

    #[test]
    fn all_powers_regular_examples() {
        let r = preset("M(3,2)").unwrap();
        let j = r.add(&r.basis_element(1), &r.basis_element(5));
        assert!(all_powers_regular(&r, &j).is_ok());
        let t = preset("T(2,2)").unwrap();
        let e12 = t.basis_element(1);
        assert_eq!(all_powers_regular(&t, &e12), Err(1));
        // 1 + g in F_2[C_2] is nilpotent but not regular
        let g = preset("FpC(2,2)").unwrap();
        let a = g.add(&g.one(), &g.basis_element(1));
        assert_eq!(all_powers_regular(&g, &a), Err(1));
    }

    #[test]
    fn split_of_a_mixed_element() {
        // a = e11 + e23 in M_3(F_2): a^2 = e11 idempotent, so m = 2,
        // unit part e11 (the corner identity), nil part e23.
        let r = preset("M(3,2)").unwrap();
        let a = r.add(&r.basis_element(0), &r.basis_element(5));
        let split = idempotent_power_split(&r, &a);
        assert_eq!(split.exponent, 2);
        assert_eq!(split.idempotent, r.basis_element(0));
        assert_eq!(split.unit_corner.dim(), 1);
        assert_eq!(split.nil_corner.dim(), 4);
        assert_eq!(split.unit_corner.embed(&split.unit_part), r.basis_element(0));
        assert_eq!(split.nil_corner.embed(&split.nil_part), r.basis_element(5));
        assert!(verify_split(&r, &a, &split));
    }

    #[test]
    fn split_of_units_idempotents_and_nilpotents() {
        let r = preset("M(2,2)").unwrap();
        // unit: e = 1, whole ring is the unit corner
        let swap = r.add(&r.basis_element(1), &r.basis_element(2));
        let split = idempotent_power_split(&r, &swap);
        assert_eq!(split.exponent, 2);
        assert_eq!(split.idempotent, r.one());
        assert_eq!(split.nil_corner.dim(), 0);
        assert!(verify_split(&r, &swap, &split));
        // idempotent: m = 1, a is its own unit part
        let e11 = r.basis_element(0);
        let split = idempotent_power_split(&r, &e11);
        assert_eq!(split.exponent, 1);
        assert!(verify_split(&r, &e11, &split));
        // nilpotent: e = 0, everything in the nil corner
        let e12 = r.basis_element(1);
        let split = idempotent_power_split(&r, &e12);
        assert_eq!(split.idempotent, r.zero());
        assert_eq!(split.unit_corner.dim(), 0);
        assert_eq!(split.nil_corner.dim(), 4);
        assert!(verify_split(&r, &e12, &split));
    }

    #[test]
    fn classification_of_m2() {
        let r = preset("M(2,2)").unwrap();
        let (summary, profiles) = classify_all(&r).unwrap();
        assert_eq!(summary.total, 16);
        assert_eq!(summary.units, 6);
        assert_eq!(summary.idempotents, 8);
        assert_eq!(summary.nilpotents, 4); // q^(n²−n) = 4
        assert_eq!(summary.regular, 16);
        assert_eq!(summary.unit_regular, 16);
        assert_eq!(summary.unit_regular_unknown, 0);
        for p in &profiles {
            assert!(profile_is_consistent(&r, p), "index {}", p.index);
        }
    }

    #[test]
    fn classification_of_the_group_algebra() {
        let r = preset("FpC(2,2)").unwrap();
        let (summary, profiles) = classify_all(&r).unwrap();
        assert_eq!(summary.total, 4);
        assert_eq!(summary.units, 2);
        assert_eq!(summary.nilpotents, 2);
        assert_eq!(summary.regular, 3);
        assert_eq!(summary.unit_regular, 3);
        for p in &profiles {
            assert!(profile_is_consistent(&r, p));
        }
    }

    #[test]
    fn structural_route_derives_verified_units() {
        let r = preset("M(2,2)").unwrap();
        for idx in 0..16 {
            let a = r.element_at(idx);
            if let StructuralOutcome::Isomorphic { unit, .. } = structural_unit_regularity(&r, &a)
            {
                assert!(r.is_unit(&unit));
                assert!(InnerInverses::verify(&r, &a, &unit));
            }
        }
    }
}
