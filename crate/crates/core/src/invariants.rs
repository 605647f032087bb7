//! Curve-level algebra: the Jacobian ideal and its saturation, graded
//! dimensions of N(f) = I_f/J_f, the total Tjurina number, free and nearly
//! free classification with exponents, and eigenspace dimension lower
//! bounds for the second cohomology of the Milnor fiber.

use serde::Serialize;

use crate::alexander::EigenvalueIndex;
use crate::error::{Error, Result};
use crate::groebner::{
    buchberger, graded_dim_gb, quotient_dim_gb, saturation, Budget, GroebnerBasis, Ideal,
};
use crate::poly::{MonomialOrder, MultiPoly, Var};

/// A reduced plane curve f = 0 with user-asserted global data: whether f is
/// irreducible and how many irreducible components it has. Reducedness
/// itself is only checked indirectly (the Tjurina count must stabilize).
#[derive(Debug, Clone)]
pub struct CurveEquation {
    f: MultiPoly,
    d: u32,
    irreducible: bool,
    components: u32,
}

impl CurveEquation {
    pub fn new(f: MultiPoly, irreducible: bool, components: u32) -> Result<CurveEquation> {
        let d = f.homogeneous_degree()?;
        if components < 1 {
            return Err(Error::Validation("component count must be positive".into()));
        }
        if irreducible != (components == 1) {
            return Err(Error::Validation(
                "components must equal 1 exactly when the curve is irreducible".into(),
            ));
        }
        Ok(CurveEquation {
            f,
            d,
            irreducible,
            components,
        })
    }

    pub fn equation(&self) -> &MultiPoly {
        &self.f
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn irreducible(&self) -> bool {
        self.irreducible
    }

    pub fn components(&self) -> u32 {
        self.components
    }
}

/// Freeness classification with exponents, from degree and total Tjurina
/// number alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FreenessKind {
    Free { d1: u32, d2: u32 },
    NearlyFree { d1: u32, d2: u32 },
    Neither,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FreenessClass {
    #[serde(flatten)]
    pub kind: FreenessKind,
    pub tau: u64,
}

/// Graded dimensions of N(f) = I_f/J_f for k = 0 .. 3(d-2).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct NfProfile {
    pub dims: Vec<u64>,
}

impl NfProfile {
    pub fn max(&self) -> u64 {
        self.dims.iter().copied().max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&v| v == 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct H2LowerBound {
    pub j: u32,
    pub eigenvalue_order: u32,
    pub dim: u64,
}

/// Default top of the N(f) degree window: N(f) is supported in 0..3(d-2)
/// for all the curves handled here, symmetric about the duality center
/// 3(d-2)/2.
pub fn nf_window_top(d: u32) -> u32 {
    3 * d.saturating_sub(2)
}

/// The ideal spanned by the three partial derivatives, flagged homogeneous.
pub fn jacobian_ideal(c: &CurveEquation) -> Ideal {
    let gens: Vec<MultiPoly> = Var::CURVE_VARS
        .iter()
        .map(|&v| c.equation().partial_derivative(v))
        .collect();
    // At least one partial of a nonzero homogeneous polynomial is nonzero
    // (Euler relation, characteristic zero).
    Ideal::new(gens, true).expect("jacobian ideal of a valid curve is nonzero")
}

/// I_f: the saturation of the Jacobian ideal with respect to (x, y, z).
pub fn saturated_jacobian(c: &CurveEquation, budget: Budget) -> Result<Ideal> {
    saturation(&jacobian_ideal(c), &Ideal::irrelevant(), budget)
}

/// Groebner data shared by all the per-curve invariants, so a full analysis
/// computes each basis once.
pub struct CurveAlgebra {
    pub jacobian: Ideal,
    pub saturated: Ideal,
    gb_jacobian: GroebnerBasis,
    gb_saturated: GroebnerBasis,
}

impl CurveAlgebra {
    pub fn compute(c: &CurveEquation, budget: Budget) -> Result<CurveAlgebra> {
        let jacobian = jacobian_ideal(c);
        let gb_jacobian = buchberger(&jacobian, MonomialOrder::Grevlex, budget)?;
        let saturated = saturation(&jacobian, &Ideal::irrelevant(), budget)?;
        let gb_saturated = buchberger(&saturated, MonomialOrder::Grevlex, budget)?;
        Ok(CurveAlgebra {
            jacobian,
            saturated,
            gb_jacobian,
            gb_saturated,
        })
    }

    pub fn saturated_is_unit(&self) -> bool {
        self.gb_saturated.is_unit_ideal()
    }

    /// dim (I_f)_k - dim (J_f)_k for k = 0 .. `nf_window_top(d)`.
    pub fn nf_dims(&self, d: u32) -> NfProfile {
        self.nf_dims_up_to(nf_window_top(d))
    }

    /// Same profile over an explicit degree window 0 ..= top.
    pub fn nf_dims_up_to(&self, top: u32) -> NfProfile {
        let dims = (0..=top)
            .map(|k| {
                let sat = graded_dim_gb(&self.gb_saturated, k);
                let jac = graded_dim_gb(&self.gb_jacobian, k);
                debug_assert!(sat >= jac);
                (sat - jac) as u64
            })
            .collect();
        NfProfile { dims }
    }

    /// Total Tjurina number: the stabilized value of dim (S/I_f)_k. Since
    /// I_f is saturated, the count is non-decreasing and a run of three
    /// equal values is final; failing to stabilize below k = 5d signals a
    /// non-reduced equation.
    pub fn total_tjurina(&self, d: u32) -> Result<u64> {
        let cap = 5 * d.max(1);
        let mut run = 0u32;
        let mut last: Option<usize> = None;
        for k in 0..=cap {
            let dim = quotient_dim_gb(&self.gb_saturated, k);
            if Some(dim) == last {
                run += 1;
                if run >= 2 {
                    return Ok(dim as u64);
                }
            } else {
                run = 0;
                last = Some(dim);
            }
        }
        Err(Error::NonStabilizing { cap })
    }

    /// Lower bounds for dim H^2(F)_{lambda_j}: the dimension of
    /// N(f)_{2d-2-j}, for j = 1..d, with the eigenvalue order reported
    /// symbolically.
    pub fn h2_lower_bounds(&self, d: u32) -> Vec<H2LowerBound> {
        (1..=d)
            .map(|j| {
                let k = 2 * d as i64 - 2 - j as i64;
                let dim = if k < 0 {
                    0
                } else {
                    let sat = graded_dim_gb(&self.gb_saturated, k as u32);
                    let jac = graded_dim_gb(&self.gb_jacobian, k as u32);
                    (sat - jac) as u64
                };
                H2LowerBound {
                    j,
                    eigenvalue_order: EigenvalueIndex::new(d, j).order,
                    dim,
                }
            })
            .collect()
    }
}

/// Graded dimensions of N(f) for a curve, computing the bases afresh.
pub fn nf_dims(c: &CurveEquation, budget: Budget) -> Result<NfProfile> {
    Ok(CurveAlgebra::compute(c, budget)?.nf_dims(c.degree()))
}

/// Total Tjurina number of a curve, computing the bases afresh.
pub fn total_tjurina(c: &CurveEquation, budget: Budget) -> Result<u64> {
    CurveAlgebra::compute(c, budget)?.total_tjurina(c.degree())
}

/// Eigenspace dimension lower bounds, computing the bases afresh.
pub fn h2_eigenspace_lower_bounds(
    c: &CurveEquation,
    budget: Budget,
) -> Result<Vec<H2LowerBound>> {
    Ok(CurveAlgebra::compute(c, budget)?.h2_lower_bounds(c.degree()))
}

/// Classify by the exponent equations. The free system d1 + d2 = d - 1,
/// d1 d2 = (d-1)^2 - tau is tried first, then the nearly free system
/// d1 + d2 = d, d1 (d2 - 1) = (d-1)^2 - tau - 1; the first positive-integer
/// solution with d1 <= d2 wins, preferring the most balanced nearly free
/// pair when the equations admit two. Smooth curves (tau = 0) are neither.
pub fn classify_freeness(d: u32, tau: u64) -> FreenessClass {
    let kind = classify_kind(d, tau);
    FreenessClass { kind, tau }
}

fn classify_kind(d: u32, tau: u64) -> FreenessKind {
    if d < 2 || tau == 0 {
        return FreenessKind::Neither;
    }
    let dd = d as i64;
    let t = tau as i64;
    let free_target = (dd - 1) * (dd - 1) - t;
    for d1 in 1..=((dd - 1) / 2) {
        let d2 = dd - 1 - d1;
        if d1 * d2 == free_target {
            return FreenessKind::Free {
                d1: d1 as u32,
                d2: d2 as u32,
            };
        }
    }
    let nearly_target = (dd - 1) * (dd - 1) - t - 1;
    for d1 in (1..=(dd / 2)).rev() {
        let d2 = dd - d1;
        if d1 * (d2 - 1) == nearly_target {
            return FreenessKind::NearlyFree {
                d1: d1 as u32,
                d2: d2 as u32,
            };
        }
    }
    FreenessKind::Neither
}

/// Cross-check of the two classification routes: the numeric exponent
/// equations must agree with the N(f) profile. Free means N(f) = 0 with a
/// genuinely singular curve; nearly free means the profile tops out at 1.
pub fn classification_consistent(class: &FreenessClass, nf: &NfProfile) -> bool {
    let singular = class.tau > 0;
    let free_profile = nf.is_zero() && singular;
    let nearly_profile = nf.max() == 1 && singular;
    match class.kind {
        FreenessKind::Free { .. } => free_profile,
        FreenessKind::NearlyFree { .. } => nearly_profile,
        FreenessKind::Neither => !free_profile && !nearly_profile,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn x() -> MultiPoly {
        MultiPoly::var(Var::X)
    }
    fn y() -> MultiPoly {
        MultiPoly::var(Var::Y)
    }
    fn z() -> MultiPoly {
        MultiPoly::var(Var::Z)
    }

    fn conic() -> CurveEquation {
        let f = x().pow(2).add(&y().pow(2)).add(&z().pow(2));
        CurveEquation::new(f, true, 1).unwrap()
    }

    fn nodal_cubic() -> CurveEquation {
        // y^2 z - x^2 (x + z): one node at [0:0:1].
        let f = y()
            .pow(2)
            .mul(&z())
            .sub(&x().pow(2).mul(&x().add(&z())));
        CurveEquation::new(f, true, 1).unwrap()
    }

    #[test]
    fn curve_equation_validation() {
        assert!(CurveEquation::new(x().add(&MultiPoly::one()), true, 1).is_err());
        assert!(CurveEquation::new(conic().equation().clone(), true, 2).is_err());
        assert!(CurveEquation::new(conic().equation().clone(), false, 1).is_err());
    }

    #[test]
    fn jacobian_of_triangle() {
        let f = x().mul(&y()).mul(&z());
        let c = CurveEquation::new(f, false, 3).unwrap();
        let j = jacobian_ideal(&c);
        let expect = [y().mul(&z()), x().mul(&z()), x().mul(&y())];
        assert_eq!(j.generators(), &expect);
    }

    #[test]
    fn jacobian_of_sextic_has_three_degree_five_generators() {
        let f = y()
            .pow(2)
            .mul(&z())
            .sub(&x().pow(3))
            .pow(2)
            .sub(&x().pow(3).mul(&y().pow(3)));
        let c = CurveEquation::new(f, true, 1).unwrap();
        let j = jacobian_ideal(&c);
        assert_eq!(j.generators().len(), 3);
        for g in j.generators() {
            assert_eq!(g.homogeneous_degree().unwrap(), 5);
        }
    }

    #[test]
    fn smooth_conic_saturates_to_unit_ideal() {
        let algebra = CurveAlgebra::compute(&conic(), Budget::default()).unwrap();
        assert!(algebra.saturated_is_unit());
        assert_eq!(algebra.total_tjurina(2).unwrap(), 0);
        assert_eq!(algebra.nf_dims(2).dims, vec![1]);
    }

    #[test]
    fn nodal_cubic_invariants() {
        let algebra = CurveAlgebra::compute(&nodal_cubic(), Budget::default()).unwrap();
        assert_eq!(algebra.total_tjurina(3).unwrap(), 1);
        // I_f strictly contains J_f already in degree d - 1 = 2.
        let sat2 = graded_dim_gb_probe(&algebra, 2);
        assert!(sat2.0 > sat2.1);
        let class = classify_freeness(3, 1);
        assert_eq!(class.kind, FreenessKind::Neither);
        assert!(classification_consistent(&class, &algebra.nf_dims(3)));
    }

    fn graded_dim_gb_probe(a: &CurveAlgebra, k: u32) -> (usize, usize) {
        (
            crate::groebner::graded_dim_gb(&a.gb_saturated, k),
            crate::groebner::graded_dim_gb(&a.gb_jacobian, k),
        )
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_freeness(6, 18).kind,
            FreenessKind::NearlyFree { d1: 3, d2: 3 }
        );
        assert_eq!(classify_freeness(6, 19).kind, FreenessKind::Free { d1: 2, d2: 3 });
        assert_eq!(classify_freeness(3, 0).kind, FreenessKind::Neither);
        // Smooth conic stays unclassified even though (1,1) solves the
        // nearly free equations at tau = 0.
        assert_eq!(classify_freeness(2, 0).kind, FreenessKind::Neither);
    }

    #[test]
    fn free_exponent_consistency() {
        // Free: d1 + d2 = d - 1 and tau = (d-1)^2 - d1 d2.
        for (d, d1, d2) in [(5u32, 1u32, 3u32), (6, 2, 3), (7, 3, 3), (9, 2, 6)] {
            let tau = ((d - 1) * (d - 1) - d1 * d2) as u64;
            assert_eq!(classify_freeness(d, tau).kind, FreenessKind::Free { d1, d2 });
        }
    }

    #[test]
    fn tjurina_invariant_under_unimodular_substitution() {
        let c = nodal_cubic();
        let f = c.equation();
        // Three unimodular coordinate changes with small integer entries.
        let subs: [(MultiPoly, MultiPoly, MultiPoly); 3] = [
            (x().add(&y()), y(), z()),
            (x(), y().add(&z()), z()),
            (x().add(&z()), y().sub(&x()), z().add(&y().scale(&rat(2)))),
        ];
        for (sx, sy, sz) in subs {
            let g = f.substitute(&sx, &sy, &sz);
            let cg = CurveEquation::new(g, true, 1).unwrap();
            assert_eq!(total_tjurina(&cg, Budget::default()).unwrap(), 1);
        }
    }

    #[test]
    fn fermat_curves_are_smooth_controls() {
        for d in 2..=5u32 {
            let f = x().pow(d).add(&y().pow(d)).add(&z().pow(d));
            let c = CurveEquation::new(f, true, 1).unwrap();
            let algebra = CurveAlgebra::compute(&c, Budget::default()).unwrap();
            assert!(algebra.saturated_is_unit(), "d = {d}");
            assert_eq!(algebra.total_tjurina(d).unwrap(), 0, "d = {d}");
            let class = classify_freeness(d, 0);
            assert_eq!(class.kind, FreenessKind::Neither, "d = {d}");
        }
    }

    #[test]
    fn non_reduced_input_fails_to_stabilize() {
        // (x + y + z)^2 is a double line; its Jacobian scheme is a whole
        // line, so the quotient dimensions grow forever.
        let f = x().add(&y()).add(&z()).pow(2);
        let c = CurveEquation::new(f, true, 1).unwrap();
        let algebra = CurveAlgebra::compute(&c, Budget::default()).unwrap();
        assert!(matches!(
            algebra.total_tjurina(2),
            Err(Error::NonStabilizing { .. })
        ));
    }

    #[test]
    fn jacobian_dims_never_exceed_saturation_dims() {
        let algebra = CurveAlgebra::compute(&nodal_cubic(), Budget::default()).unwrap();
        for k in 0..=10u32 {
            let (sat, jac) = graded_dim_gb_probe(&algebra, k);
            assert!(jac <= sat, "k = {k}");
        }
    }

    #[test]
    fn h2_bounds_have_one_entry_per_eigenvalue() {
        let algebra = CurveAlgebra::compute(&conic(), Budget::default()).unwrap();
        let bounds = algebra.h2_lower_bounds(2);
        assert_eq!(bounds.len(), 2);
        // j = 1: k = 2d-2-1 = 1, N(f)_1 = dim (S/J_f)_1 = 0 for the conic.
        assert_eq!(bounds[0].dim, 0);
        // j = 2: k = 0, dim N(f)_0 = 1.
        assert_eq!(bounds[1].dim, 1);
    }
}
