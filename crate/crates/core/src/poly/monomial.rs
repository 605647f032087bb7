use std::cmp::Ordering;
use std::fmt;

/// The three curve variables plus one auxiliary elimination variable.
///
/// Everything user-facing lives in S = Q[x,y,z]; the auxiliary `w` only
/// appears inside ideal intersection, where a block order pushes it to
/// the front so it can be eliminated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
    Z,
    /// Auxiliary elimination variable; never present in curve data.
    W,
}

impl Var {
    pub const CURVE_VARS: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::Z => 2,
            Var::W => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::W => "w",
        }
    }
}

/// A power product x^a y^b z^c w^d, stored as the exponent vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u32; 4],
}

/// Monomial orders used by the Groebner engine.
///
/// Both are well-orders refining divisibility; `Grevlex` compares total
/// degree first (x > y > z > w), `AuxElim` is the block order w >> grevlex
/// so that any monomial containing w beats any monomial free of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    Grevlex,
    AuxElim,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; 4] };

    pub fn new(x: u32, y: u32, z: u32) -> Self {
        Monomial { exps: [x, y, z, 0] }
    }

    pub fn from_exps(exps: [u32; 4]) -> Self {
        Monomial { exps }
    }

    pub fn var(v: Var) -> Self {
        let mut exps = [0; 4];
        exps[v.index()] = 1;
        Monomial { exps }
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.exps[v.index()]
    }

    pub fn exps(&self) -> [u32; 4] {
        self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps == [0; 4]
    }

    /// True when the auxiliary variable w does not occur.
    pub fn is_aux_free(&self) -> bool {
        self.exps[3] == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0; 4];
        for i in 0..4 {
            exps[i] = self.exps[i] + other.exps[i];
        }
        Monomial { exps }
    }

    pub fn pow(&self, n: u32) -> Monomial {
        let mut exps = self.exps;
        for e in &mut exps {
            *e *= n;
        }
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..4).all(|i| self.exps[i] <= other.exps[i])
    }

    /// other / self, assuming divisibility.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = [0; 4];
        for i in 0..4 {
            exps[i] = other.exps[i].checked_sub(self.exps[i])?;
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = [0; 4];
        for i in 0..4 {
            exps[i] = self.exps[i].max(other.exps[i]);
        }
        Monomial { exps }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..4).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Formal derivative exponent drop; returns the scalar factor and the
    /// lowered monomial, or None when the exponent is zero.
    pub fn derivative(&self, v: Var) -> Option<(u32, Monomial)> {
        let e = self.exps[v.index()];
        if e == 0 {
            return None;
        }
        let mut exps = self.exps;
        exps[v.index()] = e - 1;
        Some((e, Monomial { exps }))
    }

    fn cmp_grevlex(&self, other: &Monomial) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Reverse lexicographic tie-break: scanning from the least variable,
        // the first difference favours the SMALLER exponent.
        for i in (0..4).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }

    pub fn cmp_order(&self, other: &Monomial, order: MonomialOrder) -> Ordering {
        match order {
            MonomialOrder::Grevlex => self.cmp_grevlex(other),
            MonomialOrder::AuxElim => self.exps[3]
                .cmp(&other.exps[3])
                .then_with(|| self.cmp_grevlex(other)),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for v in [Var::X, Var::Y, Var::Z, Var::W] {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        Ok(())
    }
}

/// All monomials of the given total degree in x, y, z (no auxiliary), in a
/// fixed deterministic order.
pub fn monomials_of_degree(k: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in 0..=k {
        for b in 0..=(k - a) {
            out.push(Monomial::new(a, b, k - a - b));
        }
    }
    out
}
