//! The mod-2 Ferrers bijection on partitions into odd parts.
//!
//! In the mod-2 diagram an odd part `2k+1` is a row of `k+1` boxes: a
//! leading 1 followed by `k` boxes worth 2. For the largest `n` whose first
//! `n` rows each have at least `n+1` boxes (equivalently `λ_n >= 2n+1`),
//! the diagram splits into an `n × (n+1)` rectangle of weight `n(2n+1)`,
//! the boxes right of it in the first `n` rows, and the rows below.
//!
//! `right` stores the row excesses `λ_j - (2n+1)` (even numbers, zeros
//! dropped); `below` stores the remaining odd parts, each `<= 2n+1`.

use super::partition::Partition;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FerrersSplit {
    pub n: u32,
    pub right: Partition,
    pub below: Partition,
}

impl FerrersSplit {
    pub fn weight(&self) -> u64 {
        let n = self.n as u64;
        n * (2 * n + 1) + self.right.weight() + self.below.weight()
    }
}

pub fn ferrers_decompose(p: &Partition) -> Result<FerrersSplit> {
    if let Some(x) = p.parts().iter().find(|&&x| x % 2 == 0) {
        return Err(Error::InvalidFerrers(format!("{p} has the even part {x}")));
    }
    let parts = p.parts();
    let mut n = 0usize;
    // row n+1 (1-based) must reach 2(n+1)+1
    while let Some(&p) = parts.get(n) {
        let width = 2 * (n as u64 + 1) + 1;
        if (p as u64) < width {
            break;
        }
        n += 1;
    }
    let side = 2 * n as u32 + 1;
    let right: Vec<u32> = parts[..n].iter().map(|&x| x - side).filter(|&x| x > 0).collect();
    let below = parts[n..].to_vec();
    Ok(FerrersSplit { n: n as u32, right: Partition::new(right)?, below: Partition::new(below)? })
}

pub fn ferrers_compose(split: &FerrersSplit) -> Result<Partition> {
    let FerrersSplit { n, right, below } = split;
    let side = 2 * n + 1;
    if right.has_overlines() || below.has_overlines() {
        return Err(Error::InvalidFerrers("overlined parts are not allowed".into()));
    }
    if right.len() > *n as usize {
        return Err(Error::InvalidFerrers(format!("right region {right} has more than {n} rows")));
    }
    if let Some(x) = right.parts().iter().find(|&&x| x % 2 == 1) {
        return Err(Error::InvalidFerrers(format!("right region has the odd entry {x}")));
    }
    if let Some(x) = below.parts().iter().find(|&&x| x % 2 == 0) {
        return Err(Error::InvalidFerrers(format!("below region has the even part {x}")));
    }
    if below.largest() > side {
        return Err(Error::InvalidFerrers(format!(
            "below region starts with {} > {side}, so a larger rectangle would fit",
            below.largest()
        )));
    }
    let mut parts: Vec<u32> = (0..*n as usize).map(|j| side + right.parts().get(j).copied().unwrap_or(0)).collect();
    parts.extend_from_slice(below.parts());
    Partition::new(parts)
}
