//! Fraction-free Buchberger core. Working polynomials carry integer
//! coefficients (content 1, positive leading coefficient) sorted strictly
//! descending under the active order; the public layer converts back to
//! monic rational form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, MultiPoly};

/// Reduction-step counter with a hard ceiling.
pub(super) struct Counter {
    used: u64,
    max: u64,
}

impl Counter {
    pub fn new(max: u64) -> Self {
        Counter { used: 0, max }
    }

    pub fn unlimited() -> Self {
        Counter {
            used: 0,
            max: u64::MAX,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.max {
            Err(Error::ResourceLimit { steps: self.max })
        } else {
            Ok(())
        }
    }
}

pub(super) type Terms = Vec<(Monomial, BigInt)>;

#[derive(Debug, Clone)]
pub(super) struct IntPoly {
    pub terms: Terms,
}

impl IntPoly {
    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }
}

fn sort_desc(terms: &mut Terms, order: MonomialOrder) {
    terms.sort_by(|a, b| b.0.cmp_order(&a.0, order));
}

/// Divide out the integer content and make the leading coefficient positive.
fn make_primitive(terms: &mut Terms) {
    if terms.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for (_, c) in terms.iter() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if terms[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, c) in terms.iter_mut() {
            *c = &*c / &g;
        }
    }
}

/// Clear denominators and normalize; None for the zero polynomial.
pub(super) fn int_poly_from(p: &MultiPoly, order: MonomialOrder) -> Option<IntPoly> {
    if p.is_zero() {
        return None;
    }
    let mut den = BigInt::one();
    for (_, c) in p.terms() {
        den = den.lcm(c.denom());
    }
    let mut terms: Terms = p
        .terms()
        .iter()
        .map(|(m, c)| (*m, c.numer() * (&den / c.denom())))
        .collect();
    sort_desc(&mut terms, order);
    make_primitive(&mut terms);
    Some(IntPoly { terms })
}

/// Monic rational polynomial with the same zero set.
pub(super) fn to_monic_multipoly(p: &IntPoly) -> MultiPoly {
    let lc = crate::poly::Rational::from_integer(p.lc().clone());
    let terms = p
        .terms
        .iter()
        .map(|(m, c)| (*m, crate::poly::Rational::from_integer(c.clone()) / &lc))
        .collect();
    MultiPoly::from_terms(terms)
}

/// a*f - b*(u*g), merged in one pass. Inputs sorted descending; so is the
/// result.
fn axpy(f: &Terms, a: &BigInt, g: &Terms, b: &BigInt, u: &Monomial, order: MonomialOrder) -> Terms {
    let mut out: Terms = Vec::with_capacity(f.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    while i < f.len() || j < g.len() {
        if i < f.len() && j < g.len() {
            let gm = g[j].0.mul(u);
            match f[i].0.cmp_order(&gm, order) {
                std::cmp::Ordering::Greater => {
                    out.push((f[i].0, &f[i].1 * a));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((gm, -(&g[j].1 * b)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &f[i].1 * a - &g[j].1 * b;
                    if !c.is_zero() {
                        out.push((f[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        } else if i < f.len() {
            out.push((f[i].0, &f[i].1 * a));
            i += 1;
        } else {
            out.push((g[j].0.mul(u), -(&g[j].1 * b)));
            j += 1;
        }
    }
    out
}

fn scale_terms(terms: &mut Terms, a: &BigInt) {
    if a.is_one() {
        return;
    }
    for (_, c) in terms.iter_mut() {
        *c = &*c * a;
    }
}

/// Full normal-form reduction of `work` against the active reducers.
/// Fraction-free: the result is an integer multiple of the true rational
/// normal form, returned primitive. Every head cancellation counts one step.
pub(super) fn reduce_full(
    mut work: Terms,
    reducers: &[&IntPoly],
    order: MonomialOrder,
    counter: &mut Counter,
) -> Result<Terms> {
    let mut rem: Terms = Vec::new();
    let mut steps_since_content = 0u32;
    'outer: while !work.is_empty() {
        let lm = work[0].0;
        for g in reducers {
            if !g.lm().divides(&lm) {
                continue;
            }
            counter.tick()?;
            let u = g.lm().quotient(&lm).expect("divisibility checked");
            let gamma = work[0].1.gcd(g.lc());
            let a = g.lc() / &gamma; // positive: leading coefficients are
            let b = &work[0].1 / &gamma;
            work = axpy(&work, &a, &g.terms, &b, &u, order);
            debug_assert!(work.first().map_or(true, |(m, _)| *m != lm));
            scale_terms(&mut rem, &a);
            steps_since_content += 1;
            if rem.is_empty() && steps_since_content >= 32 {
                steps_since_content = 0;
                make_primitive(&mut work);
            }
            continue 'outer;
        }
        // Head term irreducible: emit and keep reducing the tail.
        rem.push(work.remove(0));
    }
    make_primitive(&mut rem);
    Ok(rem)
}

/// S-polynomial, fraction-free.
pub(super) fn s_poly(f: &IntPoly, g: &IntPoly, order: MonomialOrder) -> Terms {
    let l = f.lm().lcm(g.lm());
    let uf = f.lm().quotient(&l).expect("lcm divisible");
    let ug = g.lm().quotient(&l).expect("lcm divisible");
    let gamma = f.lc().gcd(g.lc());
    let a = g.lc() / &gamma;
    let b = f.lc() / &gamma;
    // a * uf * f - b * ug * g; reuse axpy by pre-multiplying f by uf.
    let f_shifted: Terms = f.terms.iter().map(|(m, c)| (m.mul(&uf), c.clone())).collect();
    let mut out = axpy(&f_shifted, &a, &g.terms, &b, &ug, order);
    make_primitive(&mut out);
    out
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Gebauer-Moeller pair updating: builds the pairs for a new basis element,
/// discards pairs killed by the product and chain criteria, and prunes the
/// active basis.
fn update_pairs(
    polys: &[IntPoly],
    active: &mut Vec<usize>,
    pairs: &mut Vec<Pair>,
    new_idx: usize,
) {
    let lm_new = *polys[new_idx].lm();

    let mut candidates: Vec<Pair> = active
        .iter()
        .map(|&g| Pair {
            i: g,
            j: new_idx,
            lcm: polys[g].lm().lcm(&lm_new),
        })
        .collect();

    let mut kept: Vec<Pair> = Vec::new();
    while let Some(p) = candidates.pop() {
        let coprime = polys[p.i].lm().is_coprime(&lm_new);
        let dominated = candidates
            .iter()
            .chain(kept.iter())
            .any(|q| q.lcm.divides(&p.lcm));
        if coprime || !dominated {
            kept.push(p);
        }
    }

    // Chain criterion against the existing queue.
    pairs.retain(|q| {
        !(lm_new.divides(&q.lcm)
            && polys[q.i].lm().lcm(&lm_new) != q.lcm
            && polys[q.j].lm().lcm(&lm_new) != q.lcm)
    });

    // Product criterion: coprime pairs never enter the queue.
    pairs.extend(
        kept.into_iter()
            .filter(|p| !polys[p.i].lm().is_coprime(&lm_new)),
    );

    active.retain(|&g| !lm_new.divides(polys[g].lm()));
    active.push(new_idx);
}

/// Normal selection: the pair with the smallest lcm degree, ties broken by
/// the order and then by index, keeping runs deterministic.
fn pop_best_pair(pairs: &mut Vec<Pair>, order: MonomialOrder) -> Option<Pair> {
    if pairs.is_empty() {
        return None;
    }
    let mut best = 0;
    for k in 1..pairs.len() {
        let a = &pairs[k];
        let b = &pairs[best];
        let cmp = a
            .lcm
            .degree()
            .cmp(&b.lcm.degree())
            .then_with(|| a.lcm.cmp_order(&b.lcm, order))
            .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
        if cmp == std::cmp::Ordering::Less {
            best = k;
        }
    }
    Some(pairs.remove(best))
}

/// Buchberger with Gebauer-Moeller discards, followed by minimization and
/// tail inter-reduction. Returns the reduced basis still in integer form,
/// sorted descending by leading monomial.
pub(super) fn buchberger_engine(
    gens: &[MultiPoly],
    order: MonomialOrder,
    max_steps: u64,
) -> Result<Vec<IntPoly>> {
    let mut counter = Counter::new(max_steps);
    let mut polys: Vec<IntPoly> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<IntPoly> = gens
        .iter()
        .filter_map(|p| int_poly_from(p, order))
        .collect();
    // Feed small leading monomials first; they make better reducers.
    inputs.sort_by(|a, b| a.lm().cmp_order(b.lm(), order));

    for f in inputs {
        let reducers: Vec<&IntPoly> = active.iter().map(|&k| &polys[k]).collect();
        let r = reduce_full(f.terms, &reducers, order, &mut counter)?;
        if !r.is_empty() {
            polys.push(IntPoly { terms: r });
            update_pairs(&polys, &mut active, &mut pairs, polys.len() - 1);
        }
    }

    while let Some(pair) = pop_best_pair(&mut pairs, order) {
        let s = s_poly(&polys[pair.i], &polys[pair.j], order);
        let reducers: Vec<&IntPoly> = active.iter().map(|&k| &polys[k]).collect();
        let r = reduce_full(s, &reducers, order, &mut counter)?;
        if !r.is_empty() {
            polys.push(IntPoly { terms: r });
            update_pairs(&polys, &mut active, &mut pairs, polys.len() - 1);
        }
    }

    // Minimize: keep only elements whose leading monomial no other kept
    // element divides.
    let mut by_lm: Vec<usize> = active.clone();
    by_lm.sort_by(|&a, &b| polys[a].lm().cmp_order(polys[b].lm(), order));
    let mut minimal: Vec<usize> = Vec::new();
    for idx in by_lm {
        if !minimal.iter().any(|&k| polys[k].lm().divides(polys[idx].lm())) {
            minimal.push(idx);
        }
    }

    // Tail-reduce each element against the others; leading monomials are
    // pairwise non-dividing so heads are stable and one pass suffices.
    let mut reduced: Vec<IntPoly> = Vec::with_capacity(minimal.len());
    for (pos, &idx) in minimal.iter().enumerate() {
        let others: Vec<&IntPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(q, _)| *q != pos)
            .map(|(_, &k)| &polys[k])
            .collect();
        let r = reduce_full(polys[idx].terms.clone(), &others, order, &mut counter)?;
        debug_assert!(!r.is_empty());
        reduced.push(IntPoly { terms: r });
    }

    reduced.sort_by(|a, b| b.lm().cmp_order(a.lm(), order));
    Ok(reduced)
}
