use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense univariate polynomial over Z in the variable t, lowest degree
/// first. Leading coefficient is nonzero unless the polynomial is zero
/// (empty coefficient list).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPolyZ {
    coeffs: Vec<BigInt>,
}

impl UniPolyZ {
    pub fn zero() -> Self {
        UniPolyZ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPolyZ {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPolyZ { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// t^n - 1.
    pub fn tn_minus_one(n: u32) -> Self {
        let mut coeffs = vec![BigInt::zero(); n as usize + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n as usize] = BigInt::one();
        Self::from_coeffs(coeffs)
    }

    /// t^n + 1.
    pub fn tn_plus_one(n: u32) -> Self {
        let mut coeffs = vec![BigInt::zero(); n as usize + 1];
        coeffs[0] = BigInt::one();
        coeffs[n as usize] = BigInt::one();
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &UniPolyZ) -> UniPolyZ {
        if self.is_zero() || other.is_zero() {
            return UniPolyZ::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPolyZ::from_coeffs(coeffs)
    }

    /// Exact division over Z: returns q with b*q = a, or InexactDivision.
    pub fn exact_div(&self, b: &UniPolyZ) -> Result<UniPolyZ> {
        assert!(!b.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(UniPolyZ::zero());
        }
        let db = b.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() - 1 < db {
            return Err(Error::InexactDivision);
        }
        let mut quo = vec![BigInt::zero(); rem.len() - db];
        let lead = &b.coeffs[db];
        for k in (0..quo.len()).rev() {
            let c = &rem[k + db];
            if c.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(c, lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (i, bc) in b.coeffs.iter().enumerate() {
                let t = &q * bc;
                rem[k + i] -= t;
            }
            quo[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(UniPolyZ::from_coeffs(quo))
    }

    /// Exact integer evaluation at v (Horner).
    pub fn eval(&self, v: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        acc
    }
}

impl fmt::Display for UniPolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if k == 0 {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                if k == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{}", k)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division_examples() {
        // (t^6 - 1) / (t^2 - 1) = t^4 + t^2 + 1
        let q = UniPolyZ::tn_minus_one(6)
            .exact_div(&UniPolyZ::tn_minus_one(2))
            .unwrap();
        assert_eq!(q, UniPolyZ::from_i64_coeffs(&[1, 0, 1, 0, 1]));

        // (t^9 - 1) / (t^3 - 1) = t^6 + t^3 + 1
        let q = UniPolyZ::tn_minus_one(9)
            .exact_div(&UniPolyZ::tn_minus_one(3))
            .unwrap();
        assert_eq!(q, UniPolyZ::from_i64_coeffs(&[1, 0, 0, 1, 0, 0, 1]));

        assert!(matches!(
            UniPolyZ::tn_minus_one(3).exact_div(&UniPolyZ::tn_minus_one(2)),
            Err(Error::InexactDivision)
        ));
    }

    #[test]
    fn division_then_multiplication_restores_dividend() {
        let a = UniPolyZ::tn_minus_one(12);
        let b = UniPolyZ::tn_minus_one(4);
        let q = a.exact_div(&b).unwrap();
        assert_eq!(q.mul(&b), a);
    }

    #[test]
    fn eval_examples() {
        let one = BigInt::from(1);
        assert_eq!(UniPolyZ::from_i64_coeffs(&[1, -1, 1]).eval(&one), BigInt::from(1));
        assert_eq!(
            UniPolyZ::from_i64_coeffs(&[1, 0, 0, 1, 0, 0, 1]).eval(&one),
            BigInt::from(3)
        );
        assert_eq!(UniPolyZ::zero().eval(&BigInt::from(5)), BigInt::zero());
    }

    #[test]
    fn display_readable() {
        assert_eq!(UniPolyZ::from_i64_coeffs(&[1, -1, 1]).to_string(), "t^2 - t + 1");
        assert_eq!(UniPolyZ::from_i64_coeffs(&[-1, 0, 2]).to_string(), "2*t^2 - 1");
    }
}
