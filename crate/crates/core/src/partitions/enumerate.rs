use super::partition::Partition;
use crate::error::{Error, Result};

/// Default weight cap for exhaustive enumeration.
pub const DEFAULT_CAP: u64 = 60;

pub fn check_cap(n: u64, cap: u64) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { requested: n, cap })
    } else {
        Ok(())
    }
}

/// Visit every partition of `n` with parts `<= max_part`, in reverse
/// lexicographic order (`4`, `3,1`, `2,2`, `2,1,1`, `1,1,1,1`).
pub fn for_each_partition(n: u32, max_part: u32, f: &mut impl FnMut(&[u32])) {
    fn go(rem: u32, max: u32, buf: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if rem == 0 {
            f(buf);
            return;
        }
        for p in (1..=max.min(rem)).rev() {
            buf.push(p);
            go(rem - p, p, buf, f);
            buf.pop();
        }
    }
    go(n, max_part, &mut Vec::new(), f);
}

/// All ordinary partitions of `n`, reverse lexicographic.
pub fn enumerate_partitions(n: u64, cap: u64) -> Result<Vec<Partition>> {
    check_cap(n, cap)?;
    let mut out = Vec::new();
    for_each_partition(n as u32, n as u32, &mut |ps| out.push(Partition::from_raw(ps.to_vec(), vec![false; ps.len()])));
    Ok(out)
}

/// Visit the strict partitions of `n` in reverse lexicographic order.
pub fn for_each_strict_partition(n: u32, f: &mut impl FnMut(&[u32])) {
    fn go(rem: u32, max: u32, buf: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if rem == 0 {
            f(buf);
            return;
        }
        // remaining parts are distinct and < max, so at most max(max-1)/2 more
        for p in (1..=max.min(rem)).rev() {
            if (p as u64) * (p as u64 + 1) / 2 < rem as u64 {
                break;
            }
            buf.push(p);
            go(rem - p, p - 1, buf, f);
            buf.pop();
        }
    }
    go(n, n, &mut Vec::new(), f);
}

/// Whether part `i` (0-based) of a strict partition may carry an overline:
/// it is at least 2 and exceeds the next part (0 after the last) by at least 2.
pub fn overline_allowed(parts: &[u32], i: usize) -> bool {
    let next = parts.get(i + 1).copied().unwrap_or(0);
    parts[i] >= 2 && parts[i] >= next + 2
}

/// Re-check the strict-overpartition rules on an already built value.
pub fn validate_strict_overpartition(p: &Partition) -> Result<()> {
    if !p.is_strict() {
        return Err(Error::InvalidPartition(format!("{p} is not strict")));
    }
    for (i, &o) in p.overlined().iter().enumerate() {
        if o && !overline_allowed(p.parts(), i) {
            return Err(Error::InvalidPartition(format!("part {} of {p} may not be overlined", p.parts()[i])));
        }
    }
    Ok(())
}

/// All strict overpartitions of `n`: for each strict partition (reverse
/// lexicographic), every legal overline pattern, unadorned first.
pub fn enumerate_overpartitions_strict(n: u64, cap: u64) -> Result<Vec<Partition>> {
    check_cap(n, cap)?;
    let mut out = Vec::new();
    let mut err = None;
    for_each_strict_partition(n as u32, &mut |ps| {
        let slots: Vec<usize> = (0..ps.len()).filter(|&i| overline_allowed(ps, i)).collect();
        // flag vectors in lexicographic order with false < true
        for mask in 0u64..(1u64 << slots.len()) {
            let mut flags = vec![false; ps.len()];
            for (b, &i) in slots.iter().enumerate() {
                if mask >> (slots.len() - 1 - b) & 1 == 1 {
                    flags[i] = true;
                }
            }
            let p = Partition::from_raw(ps.to_vec(), flags);
            if let Err(e) = validate_strict_overpartition(&p) {
                err.get_or_insert(e);
            }
            out.push(p);
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}
