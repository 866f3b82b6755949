//! Rule-pruned depth-first enumeration of class members and basis partitions.
//!
//! Candidates grow from the largest part downward; each new part is checked
//! against the pair rule immediately, and the last-part and length rules
//! are checked when a candidate is emitted. Parts are tried in descending
//! order with the unadorned form first, so output at a fixed weight is in
//! reverse lexicographic order (for overpartitions: by underlying parts,
//! then by overline pattern with unadorned first).

use std::collections::BTreeMap;

use super::classes::{from_parts, ClassSpec, Part, Rules};
use crate::error::Result;
use crate::partitions::{check_cap, Partition, WeightMap};
use crate::series::{MultiCoeff, QSeries};

struct Search<'a, F: FnMut(&[Part])> {
    rules: &'a Rules,
    overlines: bool,
    emit: F,
}

impl<F: FnMut(&[Part])> Search<'_, F> {
    fn accepts(&self, buf: &[Part]) -> bool {
        if let Some(len) = self.rules.length {
            if len(buf.len()).is_some() {
                return false;
            }
        }
        buf.last().is_none_or(|&p| (self.rules.last)(buf.len(), p).is_none())
    }

    fn flags(&self) -> &'static [bool] {
        if self.overlines {
            &[false, true]
        } else {
            &[false]
        }
    }

    /// Emit every accepted sequence with total weight in `[lo, hi]` (after
    /// `buf`), parts `<= max_part`, and length `<= max_len`.
    fn weight(&mut self, buf: &mut Vec<Part>, lo: u64, hi: u64, max_part: u32, max_len: usize) {
        if lo == 0 && self.accepts(buf) {
            (self.emit)(buf);
        }
        if hi == 0 || buf.len() >= max_len {
            return;
        }
        let top = max_part.min(hi.min(u32::MAX as u64) as u32);
        for v in (1..=top).rev() {
            for &over in self.flags() {
                let part = Part { value: v, over };
                if let Some(&u) = buf.last() {
                    if (self.rules.pair)(buf.len(), u, part).is_some() {
                        continue;
                    }
                }
                buf.push(part);
                self.weight(buf, lo.saturating_sub(v as u64), hi - v as u64, v, max_len);
                buf.pop();
            }
        }
    }

    /// Emit every accepted sequence of exactly `len` parts, parts `<= max_part`.
    fn length(&mut self, buf: &mut Vec<Part>, len: usize, max_part: u32) {
        if buf.len() == len {
            if self.accepts(buf) {
                (self.emit)(buf);
            }
            return;
        }
        for v in (1..=max_part).rev() {
            for &over in self.flags() {
                let part = Part { value: v, over };
                if let Some(&u) = buf.last() {
                    if (self.rules.pair)(buf.len(), u, part).is_some() {
                        continue;
                    }
                }
                buf.push(part);
                self.length(buf, len, v);
                buf.pop();
            }
        }
    }
}

fn collect_by_weight(spec: &ClassSpec, rules: &Rules, lo: u64, hi: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut s = Search { rules, overlines: spec.overlines, emit: |ps: &[Part]| out.push(from_parts(ps)) };
    s.weight(&mut Vec::new(), lo, hi, u32::MAX, usize::MAX);
    if spec.overlines {
        // group overline patterns under their underlying partition
        out.sort_by(|a, b| b.parts().cmp(a.parts()).then_with(|| a.overlined().cmp(b.overlined())));
    }
    out
}

impl ClassSpec {
    /// Members of weight exactly `n`, reverse lexicographic.
    pub fn members_of_weight(&self, n: u64, cap: u64) -> Result<Vec<Partition>> {
        check_cap(n, cap)?;
        Ok(collect_by_weight(self, &self.member, n, n))
    }

    /// Members of weight `<= max_weight`, grouped by increasing weight.
    pub fn members_up_to(&self, max_weight: u64, cap: u64) -> Result<Vec<Partition>> {
        check_cap(max_weight, cap)?;
        let mut out = Vec::new();
        for n in 0..=max_weight {
            out.extend(collect_by_weight(self, &self.member, n, n));
        }
        Ok(out)
    }

    /// `sum of weights.monomial_of(λ)` over members, reliable through `q^order`.
    ///
    /// Members are visited once each and never collected. The weighting must
    /// give every member a q-degree of at least its weight (true for every
    /// weighting that maps `Weight -> q` and other statistics to
    /// non-negative q-powers).
    pub fn oracle(&self, weights: &WeightMap, order: i64, cap: u64) -> Result<QSeries> {
        let top = order.max(0) as u64;
        check_cap(top, cap)?;
        let mut acc: BTreeMap<i64, MultiCoeff> = BTreeMap::new();
        let mut err = None;
        let mut s = Search {
            rules: &self.member,
            overlines: self.overlines,
            emit: |ps: &[Part]| match weights.monomial_of(&from_parts(ps)) {
                Ok(m) if m.q <= order => acc.entry(m.q).or_default().add_term(m.exps, m.coeff),
                Ok(_) => {}
                Err(e) => err = Some(e),
            },
        };
        s.weight(&mut Vec::new(), 0, top, u32::MAX, usize::MAX);
        if let Some(e) = err {
            return Err(e);
        }
        Ok(QSeries::from_coeffs(&weights.vars, order, acc))
    }

    /// Basis partitions of weight `<= max_weight` (any length).
    pub fn basis_up_to(&self, max_weight: u64) -> Result<Vec<Partition>> {
        let rules = self.basis_rules()?;
        Ok(collect_by_weight(self, rules, 0, max_weight))
    }

    /// Basis partitions with exactly `n` parts and largest part `<= h_max`,
    /// in ascending lexicographic order.
    pub fn enumerate_basis(&self, n: usize, h_max: u32) -> Result<Vec<Partition>> {
        let rules = self.basis_rules()?;
        let mut out = Vec::new();
        let mut s = Search { rules, overlines: self.overlines, emit: |ps: &[Part]| out.push(from_parts(ps)) };
        s.length(&mut Vec::new(), n, h_max);
        out.sort();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use crate::partitions::enumerate_overpartitions_strict;
    use crate::sip::{class_spec, ClassId};

    fn strs(v: &[crate::partitions::Partition]) -> Vec<String> {
        v.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn small_member_lists() {
        let p4 = class_spec(ClassId::P4);
        assert_eq!(strs(&p4.members_of_weight(5, 60).unwrap()), ["5", "4,1"]);
        assert!(p4.members_of_weight(3, 60).unwrap().is_empty());
        let counts: Vec<usize> = (1..=5).map(|n| p4.members_of_weight(n, 60).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 0, 1, 2]);
        let sbar = class_spec(ClassId::Sbar);
        assert_eq!(strs(&sbar.members_of_weight(2, 60).unwrap()), ["2", "2~"]);
        for n in 0..=12 {
            assert_eq!(sbar.members_of_weight(n, 60).unwrap(), enumerate_overpartitions_strict(n, 60).unwrap());
        }
        assert!(p4.members_of_weight(70, 60).is_err());
    }

    #[test]
    fn small_basis_lists() {
        assert_eq!(strs(&class_spec(ClassId::P4).enumerate_basis(1, 4).unwrap()), ["1", "2"]);
        assert_eq!(strs(&class_spec(ClassId::Sbar).enumerate_basis(1, 4).unwrap()), ["1", "2~"]);
        assert_eq!(strs(&class_spec(ClassId::GPrime).enumerate_basis(1, 9).unwrap()), ["3", "4"]);
        assert_eq!(
            strs(&class_spec(ClassId::GPrime).enumerate_basis(3, 12).unwrap()),
            ["6,3,3", "7,3,3", "7,4,4", "8,4,4"]
        );
        assert!(class_spec(ClassId::S4).enumerate_basis(1, 4).is_err());
    }
}
