//! Truncated formal Laurent series in `q` over [`MultiCoeff`] coefficients.
//!
//! A [`QSeries`] is known exactly for every q-exponent up to and including
//! `max_order`; nothing is claimed beyond it. `min_order` is a lower bound
//! on the support, used to propagate truncation through products. Exact
//! polynomials carry `max_order == EXACT`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::coeff::MultiCoeff;
use super::monomial::Monomial;
use super::varset::{Exps, VarSet};
use crate::error::{Error, Result};

/// `max_order` of a series that is an exact (untruncated) polynomial.
pub const EXACT: i64 = i64::MAX;

fn sat_add(a: i64, b: i64) -> i64 {
    if a == EXACT || b == EXACT {
        EXACT
    } else {
        a.saturating_add(b)
    }
}

#[derive(Clone, Debug)]
pub struct QSeries {
    vars: VarSet,
    min_order: i64,
    max_order: i64,
    coeffs: BTreeMap<i64, MultiCoeff>,
}

// `min_order` is only a lower bound on the support, so it is not part of the value.
impl PartialEq for QSeries {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.max_order == other.max_order && self.coeffs == other.coeffs
    }
}

impl Eq for QSeries {}

/// Outcome of comparing two series up to their common reliable order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EqualityReport {
    Match { order: i64 },
    Mismatch { q_exponent: i64, lhs: MultiCoeff, rhs: MultiCoeff },
}

impl EqualityReport {
    pub fn is_match(&self) -> bool {
        matches!(self, EqualityReport::Match { .. })
    }
}

impl QSeries {
    /// Zero to `max_order`; whatever lies beyond starts at `max_order + 1`.
    pub fn zero(vars: &VarSet, max_order: i64) -> Self {
        Self { vars: vars.clone(), min_order: sat_add(max_order, 1), max_order, coeffs: BTreeMap::new() }
    }

    pub fn one(vars: &VarSet, max_order: i64) -> Self {
        Self::from_monomial(vars, &Monomial::one(), max_order)
    }

    pub fn from_monomial(vars: &VarSet, m: &Monomial, max_order: i64) -> Self {
        let mut s = Self::zero(vars, max_order);
        if m.q <= max_order && !m.is_zero() {
            s.min_order = m.q;
            s.coeffs.insert(m.q, MultiCoeff::term(m.exps, m.coeff.clone()));
        }
        s
    }

    /// Exact polynomial from a list of monomials.
    pub fn polynomial(vars: &VarSet, terms: &[Monomial]) -> Self {
        let mut s = Self::zero(vars, EXACT);
        s.min_order = terms.iter().filter(|m| !m.is_zero()).map(|m| m.q).min().unwrap_or(EXACT);
        for m in terms {
            s.add_monomial(m);
        }
        s
    }

    /// Builds a series from raw coefficients; terms above `max_order` are dropped.
    pub fn from_coeffs(vars: &VarSet, max_order: i64, coeffs: impl IntoIterator<Item = (i64, MultiCoeff)>) -> Self {
        let mut s = Self::zero(vars, max_order);
        for (k, c) in coeffs {
            if k <= max_order && !c.is_zero() {
                s.min_order = s.min_order.min(k);
                s.coeffs.entry(k).or_default().add_assign(&c);
            }
        }
        s.coeffs.retain(|_, c| !c.is_zero());
        s
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn min_order(&self) -> i64 {
        self.min_order
    }

    pub fn max_order(&self) -> i64 {
        self.max_order
    }

    pub fn is_exact(&self) -> bool {
        self.max_order == EXACT
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i64) -> MultiCoeff {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, k: i64) -> Option<&MultiCoeff> {
        self.coeffs.get(&k)
    }

    /// Nonzero coefficients in ascending q-order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &MultiCoeff)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    /// Lowest q-exponent carrying a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.values().map(MultiCoeff::len).sum()
    }

    fn add_monomial(&mut self, m: &Monomial) {
        if m.q > self.max_order || m.is_zero() {
            return;
        }
        let c = self.coeffs.entry(m.q).or_default();
        c.add_term(m.exps, m.coeff.clone());
        if c.is_zero() {
            self.coeffs.remove(&m.q);
        }
    }

    /// Lower the truncation order to `order` (never raises it).
    pub fn truncate(&self, order: i64) -> QSeries {
        let mut s = self.clone();
        s.truncate_in_place(order);
        s
    }

    fn truncate_in_place(&mut self, order: i64) {
        if order < self.max_order {
            self.max_order = order;
            self.coeffs.retain(|k, _| *k <= order);
        }
    }

    pub fn add(&self, other: &QSeries) -> Result<QSeries> {
        self.vars.ensure_same(&other.vars)?;
        let max_order = self.max_order.min(other.max_order);
        let mut out = self.truncate(max_order);
        out.min_order = self.min_order.min(other.min_order);
        for (k, c) in other.coeffs.range(..=max_order) {
            let e = out.coeffs.entry(*k).or_default();
            e.add_assign(c);
            if e.is_zero() {
                out.coeffs.remove(k);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> QSeries {
        let mut out = self.clone();
        for c in out.coeffs.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn sub(&self, other: &QSeries) -> Result<QSeries> {
        self.add(&other.neg())
    }

    /// Cauchy product, truncated at the order both factors support.
    pub fn mul(&self, other: &QSeries) -> Result<QSeries> {
        self.vars.ensure_same(&other.vars)?;
        let max_order = sat_add(self.max_order, other.min_order).min(sat_add(other.max_order, self.min_order));
        let mut coeffs: BTreeMap<i64, MultiCoeff> = BTreeMap::new();
        for (ka, ca) in &self.coeffs {
            if sat_add(*ka, other.min_order) > max_order {
                break;
            }
            for (kb, cb) in &other.coeffs {
                let k = ka + kb;
                if k > max_order {
                    break;
                }
                coeffs.entry(k).or_default().add_product(ca, cb);
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(QSeries { vars: self.vars.clone(), min_order: sat_add(self.min_order, other.min_order), max_order, coeffs })
    }

    /// Multiply by a single monomial.
    pub fn mul_monomial(&self, m: &Monomial) -> QSeries {
        if m.is_zero() {
            return QSeries::zero(&self.vars, EXACT);
        }
        QSeries {
            vars: self.vars.clone(),
            min_order: sat_add(self.min_order, m.q),
            max_order: sat_add(self.max_order, m.q),
            coeffs: self.coeffs.iter().map(|(k, c)| (k + m.q, c.scaled(&m.coeff, &m.exps))).collect(),
        }
    }

    /// Multiply by the exact polynomial `sum(terms)`.
    pub fn mul_poly(&self, terms: &[Monomial]) -> QSeries {
        let Some(low) = terms.iter().filter(|m| !m.is_zero()).map(|m| m.q).min() else {
            return QSeries::zero(&self.vars, EXACT);
        };
        let max_order = sat_add(self.max_order, low);
        let mut coeffs: BTreeMap<i64, MultiCoeff> = BTreeMap::new();
        for m in terms.iter().filter(|m| !m.is_zero()) {
            for (k, c) in &self.coeffs {
                let kk = k + m.q;
                if kk > max_order {
                    break;
                }
                coeffs.entry(kk).or_default().add_scaled(c, &m.coeff, &m.exps);
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        QSeries { vars: self.vars.clone(), min_order: sat_add(self.min_order, low), max_order, coeffs }
    }

    /// Multiply by `(1 + m)`.
    pub fn mul_one_plus(&self, m: &Monomial) -> QSeries {
        self.mul_poly(&[Monomial::one(), m.clone()])
    }

    /// Divide by `(1 + m)` where `m` has positive q-power.
    ///
    /// Solves `b = a - m b` order by order, so the cost is linear in the
    /// size of the series.
    pub fn div_one_plus(&self, m: &Monomial) -> Result<QSeries> {
        if m.q < 1 {
            let d = QSeries::polynomial(&self.vars, &[Monomial::one(), m.clone()]);
            return self.mul(&d.inverse_to(self.max_order)?);
        }
        if self.is_exact() {
            return Err(Error::ExactInverse);
        }
        let mut out: BTreeMap<i64, MultiCoeff> = BTreeMap::new();
        let neg_c = -&m.coeff;
        let start = self.min_order;
        for k in start..=self.max_order {
            let mut c = self.coeffs.get(&k).cloned().unwrap_or_default();
            if let Some(prev) = out.get(&(k - m.q)) {
                c.add_scaled(prev, &neg_c, &m.exps);
            }
            if !c.is_zero() {
                out.insert(k, c);
            }
        }
        Ok(QSeries { vars: self.vars.clone(), min_order: self.min_order, max_order: self.max_order, coeffs: out })
    }

    /// Multiplicative inverse, up to this series' own reliable order.
    pub fn inverse(&self) -> Result<QSeries> {
        if self.is_exact() {
            let (lead, _) = self.leading_unit()?;
            if self.coeffs.len() == 1 && self.coeffs[&lead].len() == 1 {
                let (s, e) = self.coeffs[&lead].as_unit_monomial().expect("checked unit");
                return Ok(QSeries::polynomial(&self.vars, &[Monomial::new(s, -lead, -e)]));
            }
            return Err(Error::ExactInverse);
        }
        self.inverse_to(self.max_order)
    }

    fn leading_unit(&self) -> Result<(i64, (BigInt, Exps))> {
        let (lead, c) = self.coeffs.iter().next().ok_or(Error::InverseOfZero)?;
        let unit =
            c.as_unit_monomial().ok_or_else(|| Error::NonUnitLeading(super::format::coeff_to_string(c, &self.vars)))?;
        Ok((*lead, unit))
    }

    /// Inverse reliable to `min(order, max_order - 2 * valuation)`.
    ///
    /// With `a = q^m u (1 + r)` for a unit monomial `u`, the inverse is
    /// `q^-m u^-1 (1 + r)^-1`, computed by the usual triangular recurrence.
    pub fn inverse_to(&self, order: i64) -> Result<QSeries> {
        let (lead, (sign, e)) = self.leading_unit()?;
        let target = if self.is_exact() { order } else { order.min(self.max_order - 2 * lead) };
        let rel_limit = target.saturating_add(lead);
        let tail: Vec<(i64, &MultiCoeff)> = self.coeffs.iter().skip(1).map(|(k, c)| (k - lead, c)).collect();
        let inv_e = -e;
        let mut b: Vec<MultiCoeff> = Vec::new();
        for k in 0..=rel_limit.max(-1) {
            let mut acc = if k == 0 { MultiCoeff::constant(1) } else { MultiCoeff::zero() };
            for (j, aj) in &tail {
                if *j > k {
                    break;
                }
                acc.sub_assign(&aj.mul(&b[(k - j) as usize]));
            }
            b.push(acc.scaled(&sign, &inv_e));
        }
        let coeffs = b.into_iter().enumerate().map(|(k, c)| (k as i64 - lead, c));
        let mut out = QSeries::from_coeffs(&self.vars, target, coeffs);
        out.min_order = -lead;
        Ok(out)
    }

    /// Multiply by `q^k`.
    pub fn shift_q(&self, k: i64) -> QSeries {
        QSeries {
            vars: self.vars.clone(),
            min_order: sat_add(self.min_order, k),
            max_order: sat_add(self.max_order, k),
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Scale every coefficient by an integer.
    pub fn scale(&self, c: impl Into<BigInt>) -> QSeries {
        let c = c.into();
        if c.is_zero() {
            return QSeries::zero(&self.vars, EXACT);
        }
        let mut out = self.clone();
        for v in out.coeffs.values_mut() {
            *v = v.scaled(&c, &Exps::ZERO);
        }
        out
    }

    /// Substitute `var -> value` where `value = c * q^e * (vars)`; the value may
    /// mention `var` itself (e.g. `x -> -x`), the substitution is one pass.
    ///
    /// The substitution is rejected when some stored exponent `k` of `var`
    /// has `k * e < 0`: such terms move toward lower q-orders, so terms
    /// beyond the truncation could land below it. Otherwise the
    /// reliable order is unchanged. Negative exponents need a unit `c`.
    pub fn substitute(&self, var: &str, value: &Monomial) -> Result<QSeries> {
        let i = self.vars.require(var)?;
        let (lo, hi) = self
            .coeffs
            .values()
            .filter_map(|c| c.exponent_range(i))
            .fold((0, 0), |(lo, hi), (a, b)| (lo.min(a), hi.max(b)));
        if (value.q > 0 && lo < 0) || (value.q < 0 && hi > 0) {
            return Err(Error::InvalidSubstitution(format!(
                "`{var}` -> q^{} with `{var}`-exponents in [{lo},{hi}] can pull unbounded tails below the truncation",
                value.q
            )));
        }
        if lo < 0 && !value.is_unit() {
            return Err(Error::InvalidSubstitution(format!(
                "negative powers of `{var}` need a unit value, got coefficient {}",
                value.coeff
            )));
        }
        let mut out = QSeries::zero(&self.vars, self.max_order);
        out.min_order = self.min_order;
        for (k, c) in &self.coeffs {
            for (e, coef) in c.iter() {
                let pow = e.get(i) as i64;
                let v = value.powi(pow).expect("unit checked above");
                let mut rest = *e;
                rest.0[i] = 0;
                out.add_monomial(&Monomial::new(coef * &v.coeff, k + v.q, rest + v.exps));
            }
        }
        Ok(out)
    }

    /// Substitute `q -> sign * q^power` with `power >= 1`.
    pub fn substitute_q(&self, negate: bool, power: i64) -> Result<QSeries> {
        if power < 1 {
            return Err(Error::InvalidSubstitution(format!("q -> q^{power} needs power >= 1")));
        }
        let max_order = if self.is_exact() { EXACT } else { sat_add(self.max_order, 1) * power - 1 };
        let mut out = QSeries::zero(&self.vars, max_order);
        out.min_order = if self.min_order == EXACT { EXACT } else { self.min_order.saturating_mul(power) };
        for (k, c) in &self.coeffs {
            let c = if negate && k.rem_euclid(2) == 1 { c.neg() } else { c.clone() };
            out.coeffs.insert(k * power, c);
        }
        Ok(out)
    }

    /// Re-express the series over another variable set.
    ///
    /// Variables missing from `target` must not occur.
    pub fn with_vars(&self, target: &VarSet) -> Result<QSeries> {
        let map: Vec<Option<usize>> = self.vars.names().iter().map(|n| target.index_of(n)).collect();
        let mut out = QSeries::zero(target, self.max_order);
        out.min_order = self.min_order;
        for (k, c) in &self.coeffs {
            let mut nc = MultiCoeff::zero();
            for (e, coef) in c.iter() {
                let mut ne = Exps::ZERO;
                for (src, dst) in map.iter().enumerate() {
                    match dst {
                        Some(d) => ne.0[*d] = e.get(src),
                        None if e.get(src) != 0 => {
                            return Err(Error::InvalidSubstitution(format!(
                                "variable `{}` still occurs and is not in {target}",
                                self.vars.names()[src]
                            )))
                        }
                        None => {}
                    }
                }
                nc.add_term(ne, coef.clone());
            }
            if !nc.is_zero() {
                out.coeffs.insert(*k, nc);
            }
        }
        Ok(out)
    }

    /// Compare up to `min(self.max_order, other.max_order)`.
    pub fn equal(&self, other: &QSeries) -> Result<EqualityReport> {
        self.vars.ensure_same(&other.vars)?;
        let order = self.max_order.min(other.max_order);
        let keys: std::collections::BTreeSet<i64> =
            self.coeffs.range(..=order).chain(other.coeffs.range(..=order)).map(|(k, _)| *k).collect();
        for k in keys {
            let a = self.coeff(k);
            let b = other.coeff(k);
            if a != b {
                return Ok(EqualityReport::Mismatch { q_exponent: k, lhs: a, rhs: b });
            }
        }
        Ok(EqualityReport::Match { order })
    }

    /// Every stored coefficient has only non-negative integer entries.
    pub fn has_negative_coefficient(&self) -> bool {
        self.coeffs.values().any(MultiCoeff::has_negative_coefficient)
    }

    /// Sum of a family of series (empty sum is zero at `max_order`).
    pub fn sum<'a>(vars: &VarSet, max_order: i64, items: impl IntoIterator<Item = &'a QSeries>) -> Result<QSeries> {
        let mut acc = QSeries::zero(vars, max_order);
        for s in items {
            acc = acc.add(s)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: i64, k: i64) -> Monomial {
        Monomial::new(c, k, Exps::ZERO)
    }

    fn poly(vs: &VarSet, n: i64, terms: &[(i64, i64)]) -> QSeries {
        let ms: Vec<Monomial> = terms.iter().map(|&(c, k)| q(c, k)).collect();
        QSeries::polynomial(vs, &ms).truncate(n)
    }

    #[test]
    fn small_sums_and_products() {
        let v = VarSet::empty();
        let a = poly(&v, 4, &[(1, 0), (1, 1)]);
        let b = poly(&v, 4, &[(1, 1)]);
        assert_eq!(a.add(&b).unwrap(), poly(&v, 4, &[(1, 0), (2, 1)]));
        let c = poly(&v, 4, &[(1, 0), (-1, 1)]);
        assert_eq!(a.mul(&c).unwrap(), poly(&v, 4, &[(1, 0), (-1, 2)]));
        assert_eq!(a.add(&QSeries::zero(&v, 4)).unwrap(), a);
        assert_eq!(a.mul(&QSeries::one(&v, 4)).unwrap(), a);
    }

    #[test]
    fn distinct_monomials_coexist() {
        let v = VarSet::new(["x", "y"]).unwrap();
        let xq = QSeries::from_monomial(&v, &Monomial::new(1, 1, v.exps(&[("x", 1)]).unwrap()), 5);
        let yq = QSeries::from_monomial(&v, &Monomial::new(1, 1, v.exps(&[("y", 1)]).unwrap()), 5);
        let s = xq.add(&yq).unwrap();
        assert_eq!(s.coeff(1).len(), 2);
        assert_eq!(s.max_order(), 5);
    }

    #[test]
    fn hand_expanded_product() {
        // (1 + xq)(1 + xq^3) = 1 + xq + xq^3 + x^2 q^4
        let v = VarSet::new(["x"]).unwrap();
        let x = v.exps(&[("x", 1)]).unwrap();
        let a = QSeries::one(&v, 4).mul_one_plus(&Monomial::new(1, 1, x)).mul_one_plus(&Monomial::new(1, 3, x));
        let expect = QSeries::polynomial(
            &v,
            &[Monomial::one(), Monomial::new(1, 1, x), Monomial::new(1, 3, x), Monomial::new(1, 4, x.scaled(2))],
        )
        .truncate(4);
        assert_eq!(a, expect);
    }

    #[test]
    fn geometric_inverses() {
        let v = VarSet::empty();
        let a = poly(&v, 3, &[(1, 0), (-1, 1)]);
        assert_eq!(a.inverse().unwrap(), poly(&v, 3, &[(1, 0), (1, 1), (1, 2), (1, 3)]));
        assert_eq!(QSeries::one(&v, 5).inverse().unwrap(), QSeries::one(&v, 5));
        let vz = VarSet::new(["z"]).unwrap();
        let z = vz.exps(&[("z", 1)]).unwrap();
        let b = QSeries::one(&vz, 2).mul_one_plus(&Monomial::new(-1, 1, z));
        let inv = b.inverse().unwrap();
        assert_eq!(inv.coeff(2), MultiCoeff::term(z.scaled(2), 1));
        assert_eq!(inv.max_order(), 2);
        assert_eq!(b.div_one_plus(&Monomial::new(-1, 1, z)).unwrap(), QSeries::one(&vz, 2));
    }

    #[test]
    fn inverse_with_negative_valuation() {
        let v = VarSet::empty();
        // a = q^-1 (1 - q), known to q^5
        let a = poly(&v, 5, &[(1, 0), (-1, 1)]).shift_q(-1);
        let inv = a.inverse().unwrap();
        let one = a.mul(&inv).unwrap();
        assert!(one.equal(&QSeries::one(&v, one.max_order())).unwrap().is_match());
        assert_eq!(inv.coeff(1), MultiCoeff::constant(1));
    }

    #[test]
    fn non_unit_leading_is_rejected() {
        let v = VarSet::empty();
        let a = poly(&v, 3, &[(2, 0), (1, 1)]);
        assert!(matches!(a.inverse(), Err(Error::NonUnitLeading(_))));
        assert!(matches!(QSeries::zero(&v, 3).inverse(), Err(Error::InverseOfZero)));
    }

    #[test]
    fn shifts() {
        let v = VarSet::empty();
        let a = poly(&v, 6, &[(1, 1), (1, 2)]);
        assert_eq!(a.shift_q(-1), poly(&v, 5, &[(1, 0), (1, 1)]).shift_q(0));
        assert_eq!(a.shift_q(0), a);
        let one = QSeries::one(&v, 2).shift_q(3);
        assert_eq!(one.max_order(), 5);
        assert_eq!(one.coeff(3), MultiCoeff::constant(1));
    }

    #[test]
    fn substitutions() {
        let v = VarSet::new(["x", "z"]).unwrap();
        let x = v.exps(&[("x", 1)]).unwrap();
        let z = v.exps(&[("z", 1)]).unwrap();
        let a = QSeries::one(&v, 8).mul_one_plus(&Monomial::new(1, 1, x));
        let s = a.substitute("x", &Monomial::constant(-1)).unwrap();
        assert_eq!(s.coeff(1), MultiCoeff::constant(-1));
        let b = QSeries::from_monomial(&v, &Monomial::new(1, 4, x.scaled(2)), 8);
        let t = b.substitute("x", &Monomial::new(1, 1, z)).unwrap();
        assert_eq!(t.coeff(6), MultiCoeff::term(z.scaled(2), 1));
        assert_eq!(t.max_order(), 8);
    }

    #[test]
    fn unsafe_substitutions_are_rejected() {
        let v = VarSet::new(["z"]).unwrap();
        let zinv = v.exps(&[("z", -1)]).unwrap();
        let a = QSeries::from_monomial(&v, &Monomial::new(1, 1, zinv), 5);
        assert!(a.substitute("z", &Monomial::q_power(1)).is_err());
        assert!(a.substitute("z", &Monomial::constant(0)).is_err());
        assert!(a.substitute("z", &Monomial::constant(2)).is_err());
        assert!(a.substitute("z", &Monomial::constant(-1)).is_ok());
    }

    #[test]
    fn q_substitution_extends_order() {
        let v = VarSet::empty();
        let a = poly(&v, 3, &[(1, 0), (1, 1)]);
        let b = a.substitute_q(true, 2).unwrap();
        assert_eq!(b.max_order(), 7);
        assert_eq!(b.coeff(2), MultiCoeff::constant(-1));
    }

    #[test]
    fn equality_reports_first_difference() {
        let v = VarSet::empty();
        let a = poly(&v, 4, &[(1, 0), (1, 1)]);
        let b = poly(&v, 4, &[(1, 0), (2, 1)]);
        assert!(a.equal(&a.clone()).unwrap().is_match());
        match a.equal(&b).unwrap() {
            EqualityReport::Mismatch { q_exponent, lhs, rhs } => {
                assert_eq!(q_exponent, 1);
                assert_eq!(lhs, MultiCoeff::constant(1));
                assert_eq!(rhs, MultiCoeff::constant(2));
            }
            m => panic!("unexpected {m:?}"),
        }
        let other = VarSet::new(["x"]).unwrap();
        assert!(a.equal(&QSeries::zero(&other, 4)).is_err());
    }

    #[test]
    fn with_vars_drops_only_absent_variables() {
        let v = VarSet::new(["x", "y"]).unwrap();
        let e = VarSet::empty();
        let a = QSeries::one(&v, 3).mul_one_plus(&Monomial::q_power(1));
        assert_eq!(a.with_vars(&e).unwrap(), poly(&e, 3, &[(1, 0), (1, 1)]));
        let b = QSeries::from_monomial(&v, &Monomial::new(1, 1, v.exps(&[("x", 1)]).unwrap()), 3);
        assert!(b.with_vars(&e).is_err());
    }
}
