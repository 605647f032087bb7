//! Cyclotomic arithmetic and global Alexander-polynomial logic: the
//! divisibility bound assembled from local data, the prime-power root
//! exclusion for irreducible curves, the abelian fundamental-group formula,
//! and Milnor-fiber Betti bookkeeping.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{LazyLock, Mutex};

use num_integer::Integer;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::local::SingularityRecord;
use crate::poly::UniPolyZ;

/// Divisors of n in ascending order.
pub fn divisors(n: u32) -> Vec<u32> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            if i != n / i {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// Euler totient.
pub fn euler_phi(n: u32) -> u32 {
    assert!(n >= 1);
    let mut phi = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            phi = phi / p * (p - 1);
        }
        p += 1;
    }
    if m > 1 {
        phi = phi / m * (m - 1);
    }
    phi
}

/// True when n = p^a with p prime and a >= 1.
pub fn is_prime_power(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            return m == 1;
        }
        p += 1;
    }
    true // n itself prime
}

static CYCLOTOMIC_CACHE: LazyLock<Mutex<BTreeMap<u32, UniPolyZ>>> =
    LazyLock::new(|| Mutex::new(BTreeMap::new()));

/// The n-th cyclotomic polynomial, by recursive exact division of t^n - 1
/// by every proper-divisor cyclotomic. Memoized behind a mutex; the cache
/// is a transparent accelerator shared across threads.
pub fn cyclotomic_poly(n: u32) -> UniPolyZ {
    assert!(n >= 1, "cyclotomic index must be positive");
    if let Some(hit) = CYCLOTOMIC_CACHE.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let result = if n == 1 {
        UniPolyZ::from_i64_coeffs(&[-1, 1])
    } else {
        let mut acc = UniPolyZ::tn_minus_one(n);
        for d in divisors(n) {
            if d == n {
                continue;
            }
            let phi_d = cyclotomic_poly(d);
            acc = acc
                .exact_div(&phi_d)
                .expect("cyclotomic recursion divides exactly");
        }
        acc
    };
    CYCLOTOMIC_CACHE
        .lock()
        .unwrap()
        .insert(n, result.clone());
    result
}

/// A formal product Π Φ_n^{e_n} over cyclotomic indices. Multiplicities may
/// go negative transiently (quotients); a polynomial-valued product has all
/// multiplicities nonnegative. Zero multiplicities are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct CyclotomicProduct {
    factors: BTreeMap<u32, i64>,
}

impl CyclotomicProduct {
    pub fn one() -> Self {
        CyclotomicProduct::default()
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (u32, i64)>) -> Self {
        let mut out = CyclotomicProduct::default();
        for (n, e) in factors {
            out.add_factor(n, e);
        }
        out
    }

    pub fn factors(&self) -> &BTreeMap<u32, i64> {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn multiplicity(&self, n: u32) -> i64 {
        self.factors.get(&n).copied().unwrap_or(0)
    }

    pub fn add_factor(&mut self, n: u32, e: i64) {
        assert!(n >= 1);
        if e == 0 {
            return;
        }
        let slot = self.factors.entry(n).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.factors.remove(&n);
        }
    }

    /// Multiply by t^n - 1 = Π_{k | n} Φ_k (or divide, with e = -1).
    pub fn mul_tn_minus_one(&mut self, n: u32, e: i64) {
        for k in divisors(n) {
            self.add_factor(k, e);
        }
    }

    pub fn mul(&self, other: &CyclotomicProduct) -> CyclotomicProduct {
        let mut out = self.clone();
        for (&n, &e) in &other.factors {
            out.add_factor(n, e);
        }
        out
    }

    pub fn is_polynomial(&self) -> bool {
        self.factors.values().all(|&e| e >= 0)
    }

    /// Degree as a rational function: Σ e_n φ(n).
    pub fn degree(&self) -> i64 {
        self.factors
            .iter()
            .map(|(&n, &e)| e * euler_phi(n) as i64)
            .sum()
    }

    /// Expand into an honest integer polynomial; every multiplicity must be
    /// nonnegative.
    pub fn expand(&self) -> Result<UniPolyZ> {
        if let Some((&index, _)) = self.factors.iter().find(|(_, &e)| e < 0) {
            return Err(Error::NegativeMultiplicity { index });
        }
        let mut acc = UniPolyZ::one();
        for (&n, &e) in &self.factors {
            let phi = cyclotomic_poly(n);
            for _ in 0..e {
                acc = acc.mul(&phi);
            }
        }
        Ok(acc)
    }

    /// Keep only indices dividing d.
    pub fn restrict_to_divisors_of(&self, d: u32) -> CyclotomicProduct {
        CyclotomicProduct {
            factors: self
                .factors
                .iter()
                .filter(|(&n, _)| d % n == 0)
                .map(|(&n, &e)| (n, e))
                .collect(),
        }
    }
}

impl fmt::Display for CyclotomicProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (&n, &e) in &self.factors {
            if !first {
                write!(f, " * ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "Phi_{}", n)?;
            } else {
                write!(f, "Phi_{}^{}", n, e)?;
            }
        }
        Ok(())
    }
}

/// t^n - 1 as a cyclotomic product: index k with multiplicity 1 for each
/// divisor k of n.
pub fn tn_minus_1(n: u32) -> CyclotomicProduct {
    assert!(n >= 1);
    CyclotomicProduct::from_factors(divisors(n).into_iter().map(|k| (k, 1)))
}

/// A monodromy eigenvalue carried symbolically: lambda_j = exp(2πi(d+1-j)/d)
/// has multiplicative order d / gcd(d, d+1-j).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EigenvalueIndex {
    pub d: u32,
    pub j: u32,
    pub order: u32,
}

impl EigenvalueIndex {
    pub fn new(d: u32, j: u32) -> Self {
        assert!(d >= 1 && (1..=d).contains(&j));
        let order = d / d.gcd(&(d + 1 - j));
        EigenvalueIndex { d, j, order }
    }
}

/// Product of the local Alexander polynomials with no order restriction;
/// the raw divisibility bound.
pub fn global_bound_unrestricted(locals: &[CyclotomicProduct]) -> CyclotomicProduct {
    let mut acc = CyclotomicProduct::one();
    for l in locals {
        debug_assert!(l.is_polynomial());
        acc = acc.mul(l);
    }
    acc
}

/// The divisibility bound for the first Alexander polynomial: the multiset
/// sum of the local Alexander polynomials, restricted to cyclotomic indices
/// dividing the degree (monodromy eigenvalues are d-th roots of unity). Use
/// `global_bound_unrestricted` when the order restriction is not wanted.
pub fn global_bound(locals: &[CyclotomicProduct], d: u32) -> CyclotomicProduct {
    global_bound_unrestricted(locals).restrict_to_divisors_of(d)
}

/// Prime-power root exclusion: for an irreducible curve no eigenvalue of
/// prime-power order occurs, and Φ_1 is excluded as well because the
/// Alexander polynomial evaluates to ±1 at t = 1. Reducible curves pass
/// through unchanged.
pub fn zariski_filter(bound: &CyclotomicProduct, irreducible: bool) -> CyclotomicProduct {
    if !irreducible {
        return bound.clone();
    }
    CyclotomicProduct {
        factors: bound
            .factors
            .iter()
            .filter(|(&n, _)| n != 1 && !is_prime_power(n))
            .map(|(&n, &e)| (n, e))
            .collect(),
    }
}

/// Alexander polynomial of a curve whose complement has abelian fundamental
/// group: (t-1)^(r-1) with r the number of irreducible components.
pub fn abelian_alexander(components: u32) -> CyclotomicProduct {
    assert!(components >= 1);
    CyclotomicProduct::from_factors([(1u32, components as i64 - 1)])
}

/// Euler characteristics and Betti numbers of the Milnor fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BettiSummary {
    pub chi_u: i64,
    pub chi_f: i64,
    pub b1_f: i64,
    pub b2_f: i64,
}

/// Milnor-fiber Betti bookkeeping for an irreducible curve of degree d and
/// geometric genus g. The curve's Euler characteristic is that of its
/// normalization minus the branch-count corrections; the fiber is a d-fold
/// cover of the complement; b1 is taken from the asserted degree of the
/// first Alexander polynomial.
pub fn milnor_fiber_betti(
    d: u32,
    genus: i64,
    sings: &[SingularityRecord],
    delta1_degree: i64,
) -> Result<BettiSummary> {
    let chi_normalization = 2 - 2 * genus;
    let gluing: i64 = sings.iter().map(|s| s.branches() as i64 - 1).sum();
    let chi_curve = chi_normalization - gluing;
    let chi_u = 3 - chi_curve;
    let chi_f = d as i64 * chi_u;
    let b1_f = delta1_degree;
    let b2_f = chi_f - 1 + b1_f;
    if b2_f < 0 {
        return Err(Error::InconsistentTopology { b2: b2_f });
    }
    Ok(BettiSummary {
        chi_u,
        chi_f,
        b1_f,
        b2_f,
    })
}
