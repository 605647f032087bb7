use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::monomial::{Monomial, MonomialOrder, Var};

/// Exact rational coefficient. `BigRational` keeps the invariants we need:
/// always reduced to lowest terms, denominator positive, zero as 0/1.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Sparse multivariate polynomial over Q in x, y, z (and transiently the
/// auxiliary w). Terms are kept canonical: sorted descending under grevlex,
/// no duplicate monomials, no zero coefficients. The zero polynomial is the
/// empty term list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: vec![(Monomial::ONE, c)],
        }
    }

    pub fn var(v: Var) -> Self {
        MultiPoly {
            terms: vec![(Monomial::var(v), Rational::one())],
        }
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly { terms: vec![(m, c)] }
    }

    /// Canonicalize an arbitrary term soup: sort descending under grevlex,
    /// merge duplicates, drop zeros.
    pub fn from_terms(mut terms: Vec<(Monomial, Rational)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp_order(&a.0, MonomialOrder::Grevlex));
        let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 += c;
                    if last.1.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            if !c.is_zero() {
                out.push((m, c));
            }
        }
        MultiPoly { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest total degree among terms; None for the zero polynomial.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_aux_free(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_aux_free())
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Rational)> {
        match order {
            // Canonical storage is already grevlex-descending.
            MonomialOrder::Grevlex => self.terms.first().map(|(m, c)| (m, c)),
            MonomialOrder::AuxElim => self
                .terms
                .iter()
                .max_by(|a, b| a.0.cmp_order(&b.0, order))
                .map(|(m, c)| (m, c)),
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((ma, ca)), Some((mb, cb))) => match ma.cmp_order(mb, MonomialOrder::Grevlex) {
                    Ordering::Greater => {
                        out.push((*ma, ca.clone()));
                        a.next();
                    }
                    Ordering::Less => {
                        out.push((*mb, cb.clone()));
                        b.next();
                    }
                    Ordering::Equal => {
                        let c = ca.clone() + cb.clone();
                        if !c.is_zero() {
                            out.push((*ma, c));
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some((m, c)), None) => {
                    out.push((*m, c.clone()));
                    a.next();
                }
                (None, Some((m, c))) => {
                    out.push((*m, c.clone()));
                    b.next();
                }
                (None, None) => break,
            }
        }
        MultiPoly { terms: out }
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero();
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push((ma.mul(mb), ca * cb));
            }
        }
        MultiPoly::from_terms(terms)
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut result = MultiPoly::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, cc)| (*m, cc * c)).collect(),
        }
    }

    /// Formal partial derivative with respect to a curve variable.
    pub fn partial_derivative(&self, v: Var) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                m.derivative(v)
                    .map(|(e, lowered)| (lowered, c * Rational::from_integer(BigInt::from(e))))
            })
            .collect();
        // Lowering one exponent preserves relative grevlex order only within
        // the same degree slice, so re-normalize.
        MultiPoly::from_terms(terms)
    }

    /// Degree d when every term has total degree d.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree());
        let first = degs.next().ok_or(Error::ZeroPolynomial)?;
        for d in degs {
            if d != first {
                return Err(Error::NotHomogeneous {
                    lo: first.min(d),
                    hi: first.max(d),
                });
            }
        }
        Ok(first)
    }

    /// Exact division by a single nonzero polynomial under the given order:
    /// returns q with q*g = self, or None when the division leaves a
    /// remainder.
    pub fn div_exact(&self, g: &MultiPoly, order: MonomialOrder) -> Option<MultiPoly> {
        assert!(!g.is_zero(), "division by the zero polynomial");
        let mut rem = self.clone();
        let mut quo_terms: Vec<(Monomial, Rational)> = Vec::new();
        let (glm, glc) = g.leading_term(order).map(|(m, c)| (*m, c.clone()))?;
        while !rem.is_zero() {
            let (rlm, rlc) = {
                let (m, c) = rem.leading_term(order).unwrap();
                (*m, c.clone())
            };
            let u = glm.quotient(&rlm)?;
            let c = rlc / &glc;
            rem = rem.sub(&g.mul_term(&u, &c));
            quo_terms.push((u, c));
        }
        Some(MultiPoly::from_terms(quo_terms))
    }

    /// Substitute integer values for (x, y, z); w must be absent.
    pub fn eval_int(&self, x: &BigInt, y: &BigInt, z: &BigInt) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            debug_assert!(m.is_aux_free());
            let v = x.pow(m.exp(Var::X)) * y.pow(m.exp(Var::Y)) * z.pow(m.exp(Var::Z));
            acc += c * Rational::from_integer(v);
        }
        acc
    }

    /// Substitute polynomials for (x, y, z); used for coordinate changes.
    pub fn substitute(&self, x: &MultiPoly, y: &MultiPoly, z: &MultiPoly) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for (m, c) in &self.terms {
            debug_assert!(m.is_aux_free());
            let term = x
                .pow(m.exp(Var::X))
                .mul(&y.pow(m.exp(Var::Y)))
                .mul(&z.pow(m.exp(Var::Z)))
                .scale(c);
            acc = acc.add(&term);
        }
        acc
    }

    /// Grammar-compatible rendering: explicit `*` and `^`, terms descending
    /// under grevlex. Non-integer coefficients render as `a/b`, which the
    /// expression grammar cannot re-read; curve data is always integral.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff_is_one = abs.is_one();
            if !coeff_is_one || m.is_one() {
                out.push_str(&abs.to_string());
                if !m.is_one() {
                    out.push('*');
                }
            }
            if !m.is_one() {
                out.push_str(&m.to_string());
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}
