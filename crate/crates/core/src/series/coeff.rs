use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::varset::Exps;

/// Sparse multivariate Laurent polynomial with big-integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiCoeff {
    terms: BTreeMap<Exps, BigInt>,
}

impl MultiCoeff {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(Exps::ZERO, c)
    }

    pub fn term(exps: Exps, c: impl Into<BigInt>) -> Self {
        let mut m = Self::zero();
        m.add_term(exps, c.into());
        m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Exps, &BigInt)> {
        self.terms.iter()
    }

    pub fn get(&self, exps: &Exps) -> Option<&BigInt> {
        self.terms.get(exps)
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> BigInt {
        self.terms.get(&Exps::ZERO).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: Exps, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &MultiCoeff) {
        for (e, c) in &other.terms {
            self.add_term(*e, c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &MultiCoeff) {
        for (e, c) in &other.terms {
            self.add_term(*e, -c);
        }
    }

    /// `self += a * b`.
    pub fn add_product(&mut self, a: &MultiCoeff, b: &MultiCoeff) {
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                self.add_term(*ea + *eb, ca * cb);
            }
        }
    }

    /// `self += c * x^e * other`.
    pub fn add_scaled(&mut self, other: &MultiCoeff, c: &BigInt, e: &Exps) {
        for (eo, co) in &other.terms {
            self.add_term(*eo + *e, co * c);
        }
    }

    pub fn mul(&self, other: &MultiCoeff) -> MultiCoeff {
        let mut out = MultiCoeff::zero();
        out.add_product(self, other);
        out
    }

    pub fn neg(&self) -> MultiCoeff {
        MultiCoeff { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn scaled(&self, c: &BigInt, e: &Exps) -> MultiCoeff {
        let mut out = MultiCoeff::zero();
        out.add_scaled(self, c, e);
        out
    }

    /// `Some((sign, exps))` when the polynomial is `±x^exps`.
    pub fn as_unit_monomial(&self) -> Option<(BigInt, Exps)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        c.abs().is_one().then(|| (c.clone(), *e))
    }

    /// Smallest and largest exponent of variable `i`, if any term exists.
    pub fn exponent_range(&self, i: usize) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|e| e.get(i));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    pub fn has_negative_coefficient(&self) -> bool {
        self.terms.values().any(|c| c.is_negative())
    }
}

impl FromIterator<(Exps, BigInt)> for MultiCoeff {
    fn from_iter<I: IntoIterator<Item = (Exps, BigInt)>>(iter: I) -> Self {
        let mut m = MultiCoeff::zero();
        for (e, c) in iter {
            m.add_term(e, c);
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(k: i32) -> Exps {
        let mut e = Exps::ZERO;
        e.0[0] = k;
        e
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let mut m = MultiCoeff::term(x(1), 3);
        m.add_term(x(1), BigInt::from(-3));
        assert!(m.is_zero());
        assert_eq!(m, MultiCoeff::zero());
    }

    #[test]
    fn product_of_laurent_terms() {
        // (x + x^-1)^2 = x^2 + 2 + x^-2
        let a: MultiCoeff = [(x(1), BigInt::one()), (x(-1), BigInt::one())].into_iter().collect();
        let sq = a.mul(&a);
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.constant_term(), BigInt::from(2));
        assert_eq!(sq.exponent_range(0), Some((-2, 2)));
        assert!(a.as_unit_monomial().is_none());
        assert!(MultiCoeff::term(x(2), -1).as_unit_monomial().is_some());
    }
}
