use super::partition::Partition;
use super::stats::{stats_of, PartitionStats};
use crate::error::{Error, Result};
use crate::series::{Monomial, QSeries, VarSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Stat {
    Length,
    Largest,
    Weight,
    OddParts,
    EvenParts,
    Overlined,
    OddIndexedSum,
    EvenIndexedSum,
    AltSum,
}

impl Stat {
    pub fn value(self, s: &PartitionStats) -> i64 {
        match self {
            Stat::Length => s.length as i64,
            Stat::Largest => s.largest as i64,
            Stat::Weight => s.weight as i64,
            Stat::OddParts => s.odd_parts as i64,
            Stat::EvenParts => s.even_parts as i64,
            Stat::Overlined => s.overlined_count as i64,
            Stat::OddIndexedSum => s.odd_indexed_sum as i64,
            Stat::EvenIndexedSum => s.even_indexed_sum as i64,
            Stat::AltSum => s.alt_sum,
        }
    }
}

/// Assigns a monomial to each tracked statistic; a partition contributes
/// `prod value^stat`. The usual q-grading is `Weight -> q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMap {
    pub vars: VarSet,
    pub entries: Vec<(Stat, Monomial)>,
}

impl WeightMap {
    pub fn new(vars: VarSet, entries: Vec<(Stat, Monomial)>) -> Self {
        Self { vars, entries }
    }

    /// `q^{|λ|}` times `var^{stat}` for each `(stat, var)` pair.
    pub fn graded(vars: &VarSet, tracked: &[(Stat, &str)]) -> Result<Self> {
        let mut entries = vec![(Stat::Weight, Monomial::q_power(1))];
        for &(stat, name) in tracked {
            entries.push((stat, Monomial::new(1, 0, vars.exps(&[(name, 1)])?)));
        }
        Ok(Self::new(vars.clone(), entries))
    }

    pub fn monomial_of(&self, p: &Partition) -> Result<Monomial> {
        let s = stats_of(p);
        let mut m = Monomial::one();
        for (stat, value) in &self.entries {
            let k = stat.value(&s);
            let f = value
                .powi(k)
                .ok_or_else(|| Error::InvalidSubstitution(format!("negative power of non-unit weight for {stat:?}")))?;
            m = m.mul(&f);
        }
        Ok(m)
    }
}

/// `sum over members of monomial_of(λ)`, reliable through `q^order`.
///
/// The caller supplies every member of weight `<= order`; terms landing
/// beyond `order` are dropped.
pub fn oracle_series<'a>(
    members: impl IntoIterator<Item = &'a Partition>,
    weights: &WeightMap,
    order: i64,
) -> Result<QSeries> {
    let mut terms = Vec::new();
    for p in members {
        terms.push(weights.monomial_of(p)?);
    }
    Ok(QSeries::polynomial(&weights.vars, &terms).truncate(order))
}
