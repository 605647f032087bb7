//! Topological invariants of plane-curve singularities from characteristic
//! (Newton/Puiseux) pairs: Milnor number, local Alexander polynomial via the
//! iterated torus-knot formula, delta invariant, and the genus bookkeeping.

use crate::alexander::CyclotomicProduct;
use crate::error::{Error, Result};

/// Newton-pair description of a unibranch singularity: a nonempty list of
/// coprime pairs (p_i, q_i) with p_i >= 2, q_1 > p_1 and q_{i+1} >= 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPairs {
    pairs: Vec<(u32, u32)>,
}

impl CharPairs {
    pub fn new(pairs: Vec<(u32, u32)>) -> Result<CharPairs> {
        if pairs.is_empty() {
            return Err(Error::Validation("empty Newton-pair list".into()));
        }
        for (i, &(p, q)) in pairs.iter().enumerate() {
            if p < 2 {
                return Err(Error::Validation(format!(
                    "Newton pair ({p},{q}): p must be at least 2"
                )));
            }
            if q < 1 {
                return Err(Error::Validation(format!(
                    "Newton pair ({p},{q}): q must be positive"
                )));
            }
            if num_integer::gcd(p, q) != 1 {
                return Err(Error::Validation(format!(
                    "Newton pair ({p},{q}) is not coprime"
                )));
            }
            if i == 0 && q <= p {
                return Err(Error::Validation(format!(
                    "first Newton pair ({p},{q}) needs q > p"
                )));
            }
        }
        Ok(CharPairs { pairs })
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    /// Linking coefficients of the iterated torus knot:
    /// a_1 = q_1, a_{i+1} = q_{i+1} + p_i p_{i+1} a_i.
    pub fn linking_coefficients(&self) -> Vec<u64> {
        let mut out: Vec<u64> = Vec::with_capacity(self.pairs.len());
        for (i, &(p, q)) in self.pairs.iter().enumerate() {
            let a = if i == 0 {
                q as u64
            } else {
                let (prev_p, _) = self.pairs[i - 1];
                q as u64 + prev_p as u64 * p as u64 * out[i - 1]
            };
            out.push(a);
        }
        out
    }

    /// Local Alexander polynomial of the singularity, in exact cyclotomic
    /// form: the product over cables of the torus-knot polynomial
    /// Δ_{T(p,a)}(t^m) = (t^{pam} - 1)(t^m - 1) / ((t^{pm} - 1)(t^{am} - 1)),
    /// where m is the product of the later p's.
    pub fn local_alexander(&self) -> CyclotomicProduct {
        fn idx(n: u64) -> u32 {
            u32::try_from(n).expect("cyclotomic index overflow")
        }
        let links = self.linking_coefficients();
        let mut acc = CyclotomicProduct::one();
        for (i, &(p, _)) in self.pairs.iter().enumerate() {
            let m: u64 = self.pairs[i + 1..].iter().map(|&(pp, _)| pp as u64).product();
            let p = p as u64;
            let a = links[i];
            acc.mul_tn_minus_one(idx(p * a * m), 1);
            acc.mul_tn_minus_one(idx(m), 1);
            acc.mul_tn_minus_one(idx(p * m), -1);
            acc.mul_tn_minus_one(idx(a * m), -1);
        }
        debug_assert!(acc.is_polynomial());
        acc
    }

    /// Milnor number: the degree of the local Alexander polynomial.
    pub fn milnor_number(&self) -> u64 {
        let d = self.local_alexander().degree();
        debug_assert!(d > 0);
        d as u64
    }
}

/// One singular point of a curve: either unibranch with known Newton pairs,
/// or an ordinary node (the only multibranch type handled).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SingularityRecord {
    Unibranch { pairs: CharPairs, mu: u64 },
    Node { mu: u64 },
}

impl SingularityRecord {
    pub fn unibranch(pairs: CharPairs) -> SingularityRecord {
        let mu = pairs.milnor_number();
        SingularityRecord::Unibranch { pairs, mu }
    }

    pub fn node() -> SingularityRecord {
        SingularityRecord::Node { mu: 1 }
    }

    pub fn mu(&self) -> u64 {
        match self {
            SingularityRecord::Unibranch { mu, .. } | SingularityRecord::Node { mu } => *mu,
        }
    }

    pub fn branches(&self) -> u32 {
        match self {
            SingularityRecord::Unibranch { .. } => 1,
            SingularityRecord::Node { .. } => 2,
        }
    }

    /// Local Alexander polynomial: the iterated-torus-knot product for a
    /// unibranch point; t - 1 for the node (trivial local monodromy on the
    /// punctured cylinder).
    pub fn local_alexander(&self) -> CyclotomicProduct {
        match self {
            SingularityRecord::Unibranch { pairs, .. } => pairs.local_alexander(),
            SingularityRecord::Node { .. } => CyclotomicProduct::from_factors([(1, 1)]),
        }
    }

    /// Delta invariant from mu = 2 delta - branches + 1.
    pub fn delta(&self) -> Result<u64> {
        let value = self.mu() + self.branches() as u64 - 1;
        if value % 2 != 0 {
            return Err(Error::ParityError { value });
        }
        Ok(value / 2)
    }
}

/// Resolve a named singularity type from the hard-coded table:
/// A_{2k} = (2, 2k+1), E6 = (3,4), E8 = (3,5), E12 = (3,7), E14 = (3,8),
/// E18 = (3,10), and "node". Anything else must come as explicit pairs.
pub fn resolve_named(name: &str) -> Result<SingularityRecord> {
    let normalized = name.trim().to_ascii_uppercase();
    if normalized == "NODE" || normalized == "A1" {
        return Ok(SingularityRecord::node());
    }
    let pair = match normalized.as_str() {
        "E6" => Some((3, 4)),
        "E8" => Some((3, 5)),
        "E12" => Some((3, 7)),
        "E14" => Some((3, 8)),
        "E18" => Some((3, 10)),
        _ => None,
    };
    if let Some(pq) = pair {
        return Ok(SingularityRecord::unibranch(CharPairs::new(vec![pq])?));
    }
    if let Some(rest) = normalized.strip_prefix('A') {
        if let Ok(k) = rest.parse::<u32>() {
            if k >= 2 && k % 2 == 0 {
                return Ok(SingularityRecord::unibranch(CharPairs::new(vec![(
                    2,
                    k + 1,
                )])?));
            }
        }
    }
    Err(Error::Validation(format!(
        "unknown singularity name '{name}' (known: node, A_even, E6, E8, E12, E14, E18)"
    )))
}

/// Geometric genus of an irreducible degree-d curve with the given singular
/// points: (d-1)(d-2)/2 - Σ delta.
pub fn genus(d: u32, sings: &[SingularityRecord]) -> Result<i64> {
    if d < 1 {
        return Err(Error::Validation("degree must be positive".into()));
    }
    let smooth = (d as i64 - 1) * (d as i64 - 2) / 2;
    let mut total_delta: i64 = 0;
    for s in sings {
        total_delta += s.delta()? as i64;
    }
    let g = smooth - total_delta;
    if g < 0 {
        return Err(Error::NegativeGenus { genus: g });
    }
    Ok(g)
}
