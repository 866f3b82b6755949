//! Exhaustive check of the separable-partition property at a fixed weight.

use super::classes::ClassSpec;
use super::decompose::{all_decompositions, sip_recompose};
use crate::error::Result;
use crate::partitions::{for_each_partition, format_vector, Partition};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SipReport {
    pub class: String,
    pub max_weight: u64,
    pub members_checked: usize,
    pub pairs_checked: usize,
    pub violations: Vec<String>,
}

impl SipReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Every member up to `max_weight` must decompose exactly once and
/// recompose to itself; every basis-plus-π pair within the weight bound
/// must recompose to a member.
pub fn verify_sip_property(spec: &ClassSpec, max_weight: u64, cap: u64) -> Result<SipReport> {
    let members = spec.members_up_to(max_weight, cap)?;
    let mut report = SipReport { class: spec.id.to_string(), max_weight, ..Default::default() };
    for p in &members {
        report.members_checked += 1;
        let found = all_decompositions(spec, p, 2)?;
        match found.as_slice() {
            [] => report.violations.push(format!("{p}: no decomposition")),
            [d] => match sip_recompose(spec, &d.basis, &d.pi) {
                Ok(back) if &back == p => {}
                Ok(back) => report.violations.push(format!("{p}: recomposes to {back}")),
                Err(e) => report.violations.push(format!("{p}: {e}")),
            },
            [a, b, ..] => report.violations.push(format!(
                "{p}: not unique ({} + {} and {} + {})",
                a.basis,
                format_vector(&a.pi),
                b.basis,
                format_vector(&b.pi)
            )),
        }
    }
    let k = spec.modulus as u64;
    for b in spec.basis_up_to(max_weight)? {
        let room = (max_weight - b.weight()) / k;
        for m in 0..=room {
            let mut bad = Vec::new();
            for_each_partition(m as u32, m as u32, &mut |mu: &[u32]| {
                if mu.len() > b.len() {
                    return;
                }
                let mut pi: Vec<u32> = mu.iter().map(|x| x * spec.modulus).collect();
                pi.resize(b.len(), 0);
                report.pairs_checked += 1;
                if let Err(e) = recompose_member(spec, &b, &pi) {
                    bad.push(e);
                }
            });
            report.violations.extend(bad);
        }
    }
    Ok(report)
}

fn recompose_member(spec: &ClassSpec, b: &Partition, pi: &[u32]) -> std::result::Result<(), String> {
    sip_recompose(spec, b, pi).map(|_| ()).map_err(|e| format!("{b} + {}: {e}", format_vector(pi)))
}
