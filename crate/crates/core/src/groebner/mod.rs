//! Buchberger engine and derived ideal operations: normal forms,
//! intersection, colon, saturation, and graded dimension counts.

mod engine;
mod ops;

pub use ops::{colon, graded_dim, graded_dim_gb, ideal_intersection, quotient_dim_gb, saturation};

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::poly::{monomials_of_degree, Monomial, MonomialOrder, MultiPoly, Rational};

use num_traits::Zero;

/// Step budget for a single Groebner-basis computation. All desk-scale
/// inputs finish far below the default; runaway inputs fail loudly with
/// `Error::ResourceLimit` instead of hanging.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    pub max_steps: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_steps: 200_000 }
    }
}

/// A polynomial ideal given by generators.
#[derive(Debug, Clone)]
pub struct Ideal {
    generators: Vec<MultiPoly>,
    homogeneous: bool,
}

impl Ideal {
    /// Build an ideal; zero generators are dropped, the list must stay
    /// nonempty, and a homogeneous flag is verified generator by generator.
    pub fn new(generators: Vec<MultiPoly>, homogeneous: bool) -> Result<Ideal> {
        let generators: Vec<MultiPoly> =
            generators.into_iter().filter(|g| !g.is_zero()).collect();
        if generators.is_empty() {
            return Err(Error::Validation(
                "ideal needs at least one nonzero generator".into(),
            ));
        }
        if homogeneous {
            for g in &generators {
                g.homogeneous_degree()?;
            }
        }
        Ok(Ideal {
            generators,
            homogeneous,
        })
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn homogeneous(&self) -> bool {
        self.homogeneous
    }

    /// The irrelevant ideal (x, y, z).
    pub fn irrelevant() -> Ideal {
        Ideal {
            generators: crate::poly::Var::CURVE_VARS
                .iter()
                .map(|&v| MultiPoly::var(v))
                .collect(),
            homogeneous: true,
        }
    }
}

/// A finished reduced Groebner basis: monic, inter-reduced elements sorted
/// descending by leading monomial under its order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    elements: Vec<MultiPoly>,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[MultiPoly] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| *g.leading_term(self.order).expect("basis elements nonzero").0)
            .collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.len() == 1 && self.elements[0] == MultiPoly::one()
    }

    pub fn contains(&self, p: &MultiPoly) -> bool {
        normal_form(p, self).is_zero()
    }

    /// Exhaustive Buchberger postcondition: every S-polynomial of two basis
    /// elements reduces to zero modulo the basis.
    pub fn is_groebner_closed(&self) -> bool {
        let ints: Vec<engine::IntPoly> = self
            .elements
            .iter()
            .filter_map(|g| engine::int_poly_from(g, self.order))
            .collect();
        let refs: Vec<&engine::IntPoly> = ints.iter().collect();
        let mut counter = engine::Counter::unlimited();
        for i in 0..ints.len() {
            for j in (i + 1)..ints.len() {
                let s = engine::s_poly(&ints[i], &ints[j], self.order);
                match engine::reduce_full(s, &refs, self.order, &mut counter) {
                    Ok(r) if r.is_empty() => {}
                    _ => return false,
                }
            }
        }
        true
    }
}

/// Reduced Groebner basis of the ideal under the given order. Fails with
/// `ResourceLimit` if the step budget is exhausted.
pub fn buchberger(ideal: &Ideal, order: MonomialOrder, budget: Budget) -> Result<GroebnerBasis> {
    let reduced = engine::buchberger_engine(ideal.generators(), order, budget.max_steps)?;
    let elements: Vec<MultiPoly> = reduced.iter().map(engine::to_monic_multipoly).collect();
    let gb = GroebnerBasis { order, elements };
    debug_assert!(gb.is_groebner_closed());
    debug_assert!(ideal.generators().iter().all(|g| gb.contains(g)));
    Ok(gb)
}

/// Complete normal form: no term of the result is divisible by any leading
/// monomial of the basis; zero exactly when p lies in the ideal. Pure
/// rational arithmetic against the monic basis, so the result is exact.
pub fn normal_form(p: &MultiPoly, gb: &GroebnerBasis) -> MultiPoly {
    let order = gb.order;
    let basis: Vec<(Monomial, Vec<(Monomial, Rational)>)> = gb
        .elements
        .iter()
        .map(|g| {
            let mut terms = g.terms().to_vec();
            terms.sort_by(|a, b| b.0.cmp_order(&a.0, order));
            (terms[0].0, terms)
        })
        .collect();

    let mut work = p.terms().to_vec();
    work.sort_by(|a, b| b.0.cmp_order(&a.0, order));
    let mut rem: Vec<(Monomial, Rational)> = Vec::new();

    'outer: while !work.is_empty() {
        let (lm, lc) = work[0].clone();
        for (glm, gterms) in &basis {
            if !glm.divides(&lm) {
                continue;
            }
            let u = glm.quotient(&lm).expect("divisibility checked");
            // work -= lc * u * g   (g monic, so the heads cancel exactly)
            let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(work.len() + gterms.len());
            let mut i = 0;
            let mut j = 0;
            while i < work.len() || j < gterms.len() {
                if i < work.len() && j < gterms.len() {
                    let gm = gterms[j].0.mul(&u);
                    match work[i].0.cmp_order(&gm, order) {
                        Ordering::Greater => {
                            out.push(work[i].clone());
                            i += 1;
                        }
                        Ordering::Less => {
                            out.push((gm, -(&gterms[j].1 * &lc)));
                            j += 1;
                        }
                        Ordering::Equal => {
                            let c = &work[i].1 - &gterms[j].1 * &lc;
                            if !c.is_zero() {
                                out.push((work[i].0, c));
                            }
                            i += 1;
                            j += 1;
                        }
                    }
                } else if i < work.len() {
                    out.push(work[i].clone());
                    i += 1;
                } else {
                    out.push((gterms[j].0.mul(&u), -(&gterms[j].1 * &lc)));
                    j += 1;
                }
            }
            work = out;
            continue 'outer;
        }
        rem.push(work.remove(0));
    }
    MultiPoly::from_terms(rem)
}

/// Count the degree-k monomials of S = Q[x,y,z] that no leading monomial of
/// the basis divides; these span (S/I)_k.
pub(crate) fn standard_monomial_count(gb: &GroebnerBasis, k: u32) -> usize {
    let lms = gb.leading_monomials();
    monomials_of_degree(k)
        .iter()
        .filter(|m| !lms.iter().any(|lm| lm.divides(m)))
        .count()
}
