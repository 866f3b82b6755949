//! Shorthand for assembling hypergeometric-style terms at a fixed order.

use crate::error::Result;
use crate::partitions::{Stat, WeightMap};
use crate::series::{div_poch, mul_poch, Monomial, PochLength, PochSpec, QSeries, VarSet};

pub(crate) use PochLength::Infinite as INF;

pub(crate) fn fin(n: i64) -> PochLength {
    PochLength::Finite(u32::try_from(n).expect("non-negative length"))
}

/// Variable set plus target order; every series built here is reliable to `n`.
pub(crate) struct Ctx {
    pub vars: VarSet,
    pub n: i64,
}

impl Ctx {
    pub fn new(names: &[&str], order: i64) -> Self {
        Self { vars: VarSet::new(names.iter().copied()).expect("static var set"), n: order }
    }

    /// `c q^q prod v^e`.
    pub fn m(&self, c: i64, q: i64, v: &[(&str, i64)]) -> Monomial {
        let pairs: Vec<(&str, i32)> = v.iter().map(|&(name, e)| (name, e as i32)).collect();
        Monomial::new(c, q, self.vars.exps(&pairs).expect("declared variable"))
    }

    pub fn one(&self) -> QSeries {
        QSeries::one(&self.vars, self.n)
    }

    pub fn lead(&self, m: Monomial) -> QSeries {
        QSeries::from_monomial(&self.vars, &m, self.n)
    }

    /// `(c q^a vars; q^d)_len`.
    pub fn p(&self, c: i64, a: i64, v: &[(&str, i64)], d: i64, len: PochLength) -> PochSpec {
        PochSpec::new(self.m(c, a, v), Monomial::q_power(d), len)
    }

    /// `(c q^a; q^d)_len`.
    pub fn pq(&self, c: i64, a: i64, d: i64, len: PochLength) -> PochSpec {
        self.p(c, a, &[], d, len)
    }

    /// `lead * prod num / prod den`.
    pub fn term(&self, lead: Monomial, num: &[PochSpec], den: &[PochSpec]) -> Result<QSeries> {
        apply(self.lead(lead), num, den)
    }

    /// `prod num / prod den`.
    pub fn quot(&self, num: &[PochSpec], den: &[PochSpec]) -> Result<QSeries> {
        apply(self.one(), num, den)
    }

    /// `sum_{k >= lo} term(k)`, taking every `k` whose lowest q-power
    /// `min_order(k)` is at most `n`, plus one guard term past it.
    pub fn sum(
        &self,
        lo: i64,
        min_order: impl Fn(i64) -> i64,
        mut term: impl FnMut(i64) -> Result<QSeries>,
    ) -> Result<QSeries> {
        let mut acc = QSeries::zero(&self.vars, self.n);
        let mut k = lo;
        loop {
            let past = min_order(k) > self.n;
            acc = acc.add(&term(k)?)?;
            if past {
                return Ok(acc);
            }
            k += 1;
        }
    }

    /// `q^{|λ|}` together with extra statistic weights.
    pub fn weights(&self, extra: &[(Stat, Monomial)]) -> WeightMap {
        let mut entries = vec![(Stat::Weight, Monomial::q_power(1))];
        entries.extend(extra.iter().cloned());
        WeightMap::new(self.vars.clone(), entries)
    }
}

pub(crate) fn apply(mut s: QSeries, num: &[PochSpec], den: &[PochSpec]) -> Result<QSeries> {
    for p in num {
        s = mul_poch(&s, p)?;
    }
    for p in den {
        s = div_poch(&s, p)?;
    }
    Ok(s)
}
