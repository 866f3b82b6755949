use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::varset::Exps;

/// A signed monomial `c * q^e * x^a * y^b ...`.
///
/// Used as a substitution value, as the base and step of Pochhammer symbols,
/// and as the per-statistic value of a weight map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: BigInt,
    pub q: i64,
    pub exps: Exps,
}

impl Monomial {
    pub fn new(coeff: impl Into<BigInt>, q: i64, exps: Exps) -> Self {
        Self { coeff: coeff.into(), q, exps }
    }

    pub fn one() -> Self {
        Self::new(1, 0, Exps::ZERO)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(c, 0, Exps::ZERO)
    }

    pub fn q_power(q: i64) -> Self {
        Self::new(1, q, Exps::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.coeff.abs().is_one()
    }

    pub fn neg(&self) -> Self {
        Self { coeff: -&self.coeff, ..self.clone() }
    }

    pub fn mul(&self, other: &Monomial) -> Self {
        Self { coeff: &self.coeff * &other.coeff, q: self.q + other.q, exps: self.exps + other.exps }
    }

    /// Non-negative integer power.
    pub fn pow(&self, k: u32) -> Self {
        Self {
            coeff: num_traits::pow(self.coeff.clone(), k as usize),
            q: self.q * k as i64,
            exps: self.exps.scaled(k as i32),
        }
    }

    /// Integer power; negative powers need a unit coefficient.
    pub fn powi(&self, k: i64) -> Option<Self> {
        if k >= 0 {
            return Some(self.pow(k as u32));
        }
        if !self.is_unit() {
            return None;
        }
        let mut m = self.pow((-k) as u32);
        m.q = -m.q;
        m.exps = -m.exps;
        Some(m)
    }
}
