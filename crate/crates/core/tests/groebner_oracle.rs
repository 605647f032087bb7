//! Cross-checks of the Groebner machinery against independent oracles:
//! exact linear-algebra ranks for graded dimensions and brute-force
//! monomial enumeration for the ideal operations.

mod common;

use curvinv::groebner::{
    buchberger, colon, graded_dim_gb, ideal_intersection, normal_form, saturation, Budget,
    Ideal,
};
use curvinv::io::verify::monomial_oracle_trials;
use curvinv::poly::{rat, MonomialOrder, MultiPoly, Var};

fn x() -> MultiPoly {
    MultiPoly::var(Var::X)
}
fn y() -> MultiPoly {
    MultiPoly::var(Var::Y)
}
fn z() -> MultiPoly {
    MultiPoly::var(Var::Z)
}

#[test]
fn nodal_cubic_saturation_strictly_grows_in_low_degree() {
    // f = y^2 z - x^3 - x^2 z; the rank oracle pins dim (J_f)_k, the
    // Groebner count pins dim (I_f)_k, and at k = d - 1 = 2 the saturated
    // ideal is strictly bigger.
    let f = y().pow(2).mul(&z()).sub(&x().pow(3)).sub(&x().pow(2).mul(&z()));
    let c = curvinv::invariants::CurveEquation::new(f, true, 1).unwrap();
    let jac = curvinv::invariants::jacobian_ideal(&c);
    let sat = curvinv::invariants::saturated_jacobian(&c, Budget::default()).unwrap();

    let gb_jac = buchberger(&jac, MonomialOrder::Grevlex, Budget::default()).unwrap();
    let gb_sat = buchberger(&sat, MonomialOrder::Grevlex, Budget::default()).unwrap();

    for k in 0..=8u32 {
        assert_eq!(
            graded_dim_gb(&gb_jac, k),
            common::graded_dim_rank_oracle(jac.generators(), k),
            "J_f at k = {k}"
        );
        assert_eq!(
            graded_dim_gb(&gb_sat, k),
            common::graded_dim_rank_oracle(sat.generators(), k),
            "I_f at k = {k}"
        );
    }
    assert!(graded_dim_gb(&gb_sat, 2) > graded_dim_gb(&gb_jac, 2));
}

#[test]
fn monomial_ideal_operations_agree_with_brute_force() {
    // Fresh seed, distinct from the verify-paper row.
    assert_eq!(monomial_oracle_trials(8, 0x0A1B2C3D), 8);
}

#[test]
fn reduced_basis_leading_monomials_pairwise_non_dividing() {
    let systems = vec![
        vec![x().pow(2).add(&y().pow(2)), x().mul(&y())],
        vec![
            x().pow(3).sub(&y().pow(2).mul(&z())),
            x().mul(&y()).sub(&z().pow(2)),
        ],
    ];
    for gens in systems {
        let ideal = Ideal::new(gens, false).unwrap();
        let gb = buchberger(&ideal, MonomialOrder::Grevlex, Budget::default()).unwrap();
        let lms = gb.leading_monomials();
        for (i, a) in lms.iter().enumerate() {
            for (j, b) in lms.iter().enumerate() {
                if i != j {
                    assert!(!a.divides(b), "leading monomial {a} divides {b}");
                }
            }
        }
        // Elements are monic.
        for g in gb.elements() {
            let (_, lc) = g.leading_term(MonomialOrder::Grevlex).unwrap();
            assert_eq!(lc, &rat(1));
        }
    }
}

#[test]
fn saturation_fixed_point_on_already_saturated_ideal() {
    // (x) is prime and y is a nonzerodivisor mod (x): saturating by (y)
    // changes nothing.
    let i = Ideal::new(vec![x()], true).unwrap();
    let j = Ideal::new(vec![y()], true).unwrap();
    let s = saturation(&i, &j, Budget::default()).unwrap();
    let gb_i = buchberger(&i, MonomialOrder::Grevlex, Budget::default()).unwrap();
    let gb_s = buchberger(&s, MonomialOrder::Grevlex, Budget::default()).unwrap();
    assert_eq!(gb_i, gb_s);
}

#[test]
fn intersection_symmetry_and_containment() {
    let i = Ideal::new(vec![x().pow(2), y().mul(&z())], true).unwrap();
    let j = Ideal::new(vec![x().mul(&y()), z().pow(2)], true).unwrap();
    let ab = ideal_intersection(&i, &j, Budget::default()).unwrap();
    let ba = ideal_intersection(&j, &i, Budget::default()).unwrap();
    let gb_ab = buchberger(&ab, MonomialOrder::Grevlex, Budget::default()).unwrap();
    let gb_ba = buchberger(&ba, MonomialOrder::Grevlex, Budget::default()).unwrap();
    assert_eq!(gb_ab, gb_ba);
    // The intersection sits inside both inputs.
    for g in ab.generators() {
        let gb_i = buchberger(&i, MonomialOrder::Grevlex, Budget::default()).unwrap();
        let gb_j = buchberger(&j, MonomialOrder::Grevlex, Budget::default()).unwrap();
        assert!(normal_form(g, &gb_i).is_zero());
        assert!(normal_form(g, &gb_j).is_zero());
    }
}

#[test]
fn membership_independent_of_monomial_order() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x0D0E0F);
    let mut random_poly = |max_terms: usize, max_exp: u32| -> MultiPoly {
        let n = rng.gen_range(1..=max_terms);
        let terms = (0..n)
            .map(|_| {
                (
                    curvinv::poly::Monomial::new(
                        rng.gen_range(0..=max_exp),
                        rng.gen_range(0..=max_exp),
                        rng.gen_range(0..=max_exp),
                    ),
                    rat(rng.gen_range(-5..=5)),
                )
            })
            .collect();
        MultiPoly::from_terms(terms)
    };
    let mut checked = 0;
    while checked < 12 {
        let g1 = random_poly(3, 2);
        let g2 = random_poly(3, 2);
        let Ok(ideal) = Ideal::new(vec![g1.clone(), g2.clone()], false) else {
            continue;
        };
        let Ok(gb_grevlex) = buchberger(&ideal, MonomialOrder::Grevlex, Budget::default()) else {
            continue;
        };
        let Ok(gb_elim) = buchberger(&ideal, MonomialOrder::AuxElim, Budget::default()) else {
            continue;
        };
        // A guaranteed member and a random probe must get the same verdict
        // from both bases.
        let member = g1.mul(&random_poly(2, 2)).add(&g2.mul(&random_poly(2, 2)));
        let probe = random_poly(4, 3);
        assert!(normal_form(&member, &gb_grevlex).is_zero());
        assert!(normal_form(&member, &gb_elim).is_zero());
        assert_eq!(
            normal_form(&probe, &gb_grevlex).is_zero(),
            normal_form(&probe, &gb_elim).is_zero(),
        );
        checked += 1;
    }
}

#[test]
fn colon_undoes_multiplication_by_a_regular_element() {
    // ((x^2 + y^2) * g : g) recovers (x^2 + y^2) for several g.
    let p = x().pow(2).add(&y().pow(2));
    for g in [x(), y().add(&z()), x().mul(&y()).add(&z().pow(2))] {
        let i = Ideal::new(vec![p.mul(&g)], true).unwrap();
        let j = Ideal::new(vec![g.clone()], true).unwrap();
        let q = colon(&i, &j, Budget::default()).unwrap();
        let gb_q = buchberger(&q, MonomialOrder::Grevlex, Budget::default()).unwrap();
        let gb_p = buchberger(
            &Ideal::new(vec![p.clone()], true).unwrap(),
            MonomialOrder::Grevlex,
            Budget::default(),
        )
        .unwrap();
        assert_eq!(gb_q, gb_p, "colon by {g}");
    }
}
