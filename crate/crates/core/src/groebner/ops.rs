//! Derived ideal operations built on the Buchberger engine: intersection by
//! elimination, colon, saturation by iterated colon, and graded dimensions.

use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, MultiPoly, Var};

use super::{buchberger, standard_monomial_count, Budget, GroebnerBasis, Ideal};

/// Generators of i ∩ j via one auxiliary variable: the aux-free part of a
/// Groebner basis of w·i + (1-w)·j under the block order w >> grevlex.
pub fn ideal_intersection(i: &Ideal, j: &Ideal, budget: Budget) -> Result<Ideal> {
    let w = MultiPoly::var(Var::W);
    let one_minus_w = MultiPoly::one().sub(&w);
    let mut gens: Vec<MultiPoly> = Vec::new();
    for f in i.generators() {
        gens.push(w.mul(f));
    }
    for g in j.generators() {
        gens.push(one_minus_w.mul(g));
    }
    let mixed = Ideal::new(gens, false)?;
    let gb = buchberger(&mixed, MonomialOrder::AuxElim, budget)?;
    let eliminated: Vec<MultiPoly> = gb
        .elements()
        .iter()
        .filter(|p| p.is_aux_free())
        .cloned()
        .collect();
    // Both inputs nonzero, so the product ideal (and hence the intersection)
    // is nonzero and the eliminated basis cannot be empty.
    let homogeneous = i.homogeneous() && j.homogeneous();
    Ideal::new(eliminated, homogeneous)
}

/// The colon ideal {g : g·j ⊆ i}: per generator of j as (i ∩ (g)) / g,
/// then intersected over the generators.
pub fn colon(i: &Ideal, j: &Ideal, budget: Budget) -> Result<Ideal> {
    let mut acc: Option<Ideal> = None;
    for g in j.generators() {
        let principal = Ideal::new(vec![g.clone()], i.homogeneous() && j.homogeneous())?;
        let meet = ideal_intersection(i, &principal, budget)?;
        let mut quotients = Vec::with_capacity(meet.generators().len());
        for h in meet.generators() {
            let q = h
                .div_exact(g, MonomialOrder::Grevlex)
                .ok_or_else(|| {
                    Error::Inconsistent(
                        "element of i ∩ (g) is not divisible by g".into(),
                    )
                })?;
            quotients.push(q);
        }
        let part = Ideal::new(quotients, meet.homogeneous())?;
        acc = Some(match acc {
            None => part,
            Some(prev) => ideal_intersection(&prev, &part, budget)?,
        });
    }
    acc.ok_or_else(|| Error::Validation("colon by an ideal with no nonzero generator".into()))
}

/// Saturation i : j^∞ as the limit of the ascending chain i : j^k, iterating
/// the colon until the reduced Groebner basis stops changing.
pub fn saturation(i: &Ideal, j: &Ideal, budget: Budget) -> Result<Ideal> {
    let mut current = i.clone();
    let mut current_gb = buchberger(&current, MonomialOrder::Grevlex, budget)?;
    // The chain strictly ascends until it stabilizes; the cap only guards
    // against a defective colon.
    for _ in 0..64 {
        let next = colon(&current, j, budget)?;
        let next_gb = buchberger(&next, MonomialOrder::Grevlex, budget)?;
        if next_gb == current_gb {
            return Ok(current);
        }
        current = next;
        current_gb = next_gb;
    }
    Err(Error::ResourceLimit { steps: budget.max_steps })
}

/// Dimension of the degree-k graded piece of a homogeneous ideal:
/// C(k+2,2) minus the number of degree-k standard monomials of S/i.
pub fn graded_dim(i: &Ideal, k: u32, budget: Budget) -> Result<usize> {
    if !i.homogeneous() {
        return Err(Error::Validation(
            "graded dimension requires a homogeneous ideal".into(),
        ));
    }
    let gb = buchberger(i, MonomialOrder::Grevlex, budget)?;
    Ok(graded_dim_gb(&gb, k))
}

/// Same as `graded_dim` on an already-computed grevlex basis.
pub fn graded_dim_gb(gb: &GroebnerBasis, k: u32) -> usize {
    let total = ((k + 1) * (k + 2) / 2) as usize;
    total - standard_monomial_count(gb, k)
}

/// dim (S/I)_k, the complementary count.
pub fn quotient_dim_gb(gb: &GroebnerBasis, k: u32) -> usize {
    standard_monomial_count(gb, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::normal_form;

    fn x() -> MultiPoly {
        MultiPoly::var(Var::X)
    }
    fn y() -> MultiPoly {
        MultiPoly::var(Var::Y)
    }
    fn z() -> MultiPoly {
        MultiPoly::var(Var::Z)
    }

    fn ideal(gens: Vec<MultiPoly>) -> Ideal {
        Ideal::new(gens, true).unwrap()
    }

    fn same_ideal(a: &Ideal, b: &Ideal) -> bool {
        let budget = Budget::default();
        let ga = buchberger(a, MonomialOrder::Grevlex, budget).unwrap();
        let gb = buchberger(b, MonomialOrder::Grevlex, budget).unwrap();
        ga == gb
    }

    #[test]
    fn intersection_examples() {
        let budget = Budget::default();
        // (x) ∩ (y) = (xy)
        let meet = ideal_intersection(&ideal(vec![x()]), &ideal(vec![y()]), budget).unwrap();
        assert!(same_ideal(&meet, &ideal(vec![x().mul(&y())])));

        // (x^2) ∩ (x) = (x^2)
        let meet = ideal_intersection(&ideal(vec![x().pow(2)]), &ideal(vec![x()]), budget).unwrap();
        assert!(same_ideal(&meet, &ideal(vec![x().pow(2)])));

        // (x, y) ∩ (z) = (xz, yz)
        let meet =
            ideal_intersection(&ideal(vec![x(), y()]), &ideal(vec![z()]), budget).unwrap();
        assert!(same_ideal(&meet, &ideal(vec![x().mul(&z()), y().mul(&z())])));
    }

    #[test]
    fn colon_examples() {
        let budget = Budget::default();
        // (xy) : (x) = (y)
        let q = colon(&ideal(vec![x().mul(&y())]), &ideal(vec![x()]), budget).unwrap();
        assert!(same_ideal(&q, &ideal(vec![y()])));

        // (x) : (y) = (x)
        let q = colon(&ideal(vec![x()]), &ideal(vec![y()]), budget).unwrap();
        assert!(same_ideal(&q, &ideal(vec![x()])));

        // (x^2, xy, xz) : (x, y, z) = (x)
        let q = colon(
            &ideal(vec![x().pow(2), x().mul(&y()), x().mul(&z())]),
            &Ideal::irrelevant(),
            budget,
        )
        .unwrap();
        assert!(same_ideal(&q, &ideal(vec![x()])));
    }

    #[test]
    fn saturation_examples() {
        let budget = Budget::default();
        // sat((x^2, xy, xz), (x,y,z)) = (x)
        let s = saturation(
            &ideal(vec![x().pow(2), x().mul(&y()), x().mul(&z())]),
            &Ideal::irrelevant(),
            budget,
        )
        .unwrap();
        assert!(same_ideal(&s, &ideal(vec![x()])));

        // Saturating the irrelevant ideal by itself gives (1).
        let s = saturation(&Ideal::irrelevant(), &Ideal::irrelevant(), budget).unwrap();
        let gb = buchberger(&s, MonomialOrder::Grevlex, budget).unwrap();
        assert!(gb.is_unit_ideal());
    }

    #[test]
    fn saturation_contains_and_idempotent() {
        let budget = Budget::default();
        let i = ideal(vec![x().pow(2), x().mul(&y()), x().mul(&z())]);
        let s = saturation(&i, &Ideal::irrelevant(), budget).unwrap();
        let gb_s = buchberger(&s, MonomialOrder::Grevlex, budget).unwrap();
        for g in i.generators() {
            assert!(normal_form(g, &gb_s).is_zero());
        }
        let s2 = saturation(&s, &Ideal::irrelevant(), budget).unwrap();
        assert!(same_ideal(&s, &s2));
    }

    #[test]
    fn graded_dims_of_irrelevant_ideal() {
        let budget = Budget::default();
        assert_eq!(graded_dim(&Ideal::irrelevant(), 1, budget).unwrap(), 3);
        assert_eq!(graded_dim(&Ideal::irrelevant(), 0, budget).unwrap(), 0);
    }

    #[test]
    fn graded_dims_of_unit_ideal_fill_the_ring() {
        let budget = Budget::default();
        let unit = Ideal::new(vec![MultiPoly::one()], true).unwrap();
        for k in 0..=20u32 {
            let expect = ((k + 1) * (k + 2) / 2) as usize;
            assert_eq!(graded_dim(&unit, k, budget).unwrap(), expect);
        }
    }
}
